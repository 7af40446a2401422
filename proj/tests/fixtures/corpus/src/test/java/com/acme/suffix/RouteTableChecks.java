package com.acme.suffix;

import org.junit.Assert;

public class RouteTableChecks {

    public void longestMatchTest() {
        Assert.assertEquals(2, compute(2));
    }

    public void defaultRouteTest() {
        Assert.assertEquals(3, compute(3));
    }

    public void withdrawTest() {
        Assert.assertEquals(4, compute(4));
    }

    public void mergeTest() {
        Assert.assertEquals(5, compute(5));
    }

    public void loopGuardTest() {
        Assert.assertEquals(6, compute(6));
    }

    public void flapDampenTest() {
        Assert.assertEquals(7, compute(7));
    }

    private int compute(int x) {
        return x;
    }
}

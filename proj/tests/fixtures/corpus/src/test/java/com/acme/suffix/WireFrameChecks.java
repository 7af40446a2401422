package com.acme.suffix;

import org.junit.Assert;

public class WireFrameChecks {

    public void encodeTest() {
        Assert.assertEquals(2, compute(2));
    }

    public void decodeTest() {
        Assert.assertEquals(3, compute(3));
    }

    public void paddingTest() {
        Assert.assertEquals(4, compute(4));
    }

    public void checksumTest() {
        Assert.assertEquals(5, compute(5));
    }

    public void fragmentTest() {
        Assert.assertEquals(6, compute(6));
    }

    private static int bytes(int x) {
        return x;
    }

    private int compute(int x) {
        return x;
    }
}

package com.acme.suffix;

import org.junit.Assert;

public class TariffEngineChecks {

    public void baseRateTest() {
        Assert.assertEquals(2, compute(2));
    }

    public void surchargeTest() {
        Assert.assertEquals(3, compute(3));
    }

    public void discountTest() {
        Assert.assertEquals(4, compute(4));
    }

    public void roundingTest() {
        Assert.assertEquals(5, compute(5));
    }

    public void currencyTest() {
        Assert.assertEquals(6, compute(6));
    }

    private static int seed(int x) {
        return x;
    }

    private int compute(int x) {
        return x;
    }
}

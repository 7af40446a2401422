package com.acme.db;

import org.testng.annotations.Test;
import org.testng.Assert;

public class ConnectionPoolTest {
    private final ConnectionPool subject = new ConnectionPool();

    @Test
    public void duplicatesCollapse() {
        Assert.assertEquals(subject.size(), 1);
    }

    @Test
    public void boundaryAtZero() {
        Assert.assertTrue(subject.accepts("kappa"));
    }

    @Test
    public void boundaryAtMax() {
        Assert.assertFalse(subject.accepts(""));
    }

    @Test
    public void whitespaceIsTrimmed() {
        Assert.assertNotNull(subject.lookup("quorum"));
    }

    @Test
    public void mixedCaseNormalizes() {
        Assert.assertEquals(subject.apply(14), 5);
    }

    @Test
    public void testReset() {
        Assert.assertEquals(subject.size(), 6);
    }

    @Test
    public void testReuseAfterClear() {
        Assert.assertTrue(subject.accepts("alpha"));
    }

    @Test
    public void largePayload() {
        Assert.assertFalse(subject.accepts(""));
    }

}

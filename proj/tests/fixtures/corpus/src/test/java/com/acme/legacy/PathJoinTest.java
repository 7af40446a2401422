package com.acme.legacy;

import junit.framework.TestCase;

public class PathJoinTest extends TestCase {

    protected void setUp() throws Exception {
        super.setUp();
    }

    public void testRelative() {
        assertEquals(1, work(1));
    }

    public void testAbsolute() {
        assertEquals(2, work(2));
    }

    public void testDotSegments() {
        assertEquals(3, work(3));
    }

    public void testTrailingSlash() {
        assertEquals(4, work(4));
    }

    public void testWindowsSeparators() {
        assertEquals(5, work(5));
    }

    public void testEmptyParts() {
        assertEquals(6, work(6));
    }

    private int work(int x) {
        return x;
    }
}

package com.acme.legacy;

import junit.framework.TestCase;

public class CodecRoundTrip extends TestCase {

    protected void setUp() throws Exception {
        super.setUp();
    }

    public void testAscii() {
        assertEquals(1, work(1));
    }

    public void testLatin1() {
        assertEquals(2, work(2));
    }

    public void testUtf8() {
        assertEquals(3, work(3));
    }

    public void testEmpty() {
        assertEquals(4, work(4));
    }

    public void testBinarySafe() {
        assertEquals(5, work(5));
    }

    public void testLongInput() {
        assertEquals(6, work(6));
    }

    public void testChunked() {
        assertEquals(7, work(7));
    }

    public void testMalformed() {
        assertEquals(8, work(8));
    }

    private int work(int x) {
        return x;
    }
}

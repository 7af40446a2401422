package com.acme.web;

import junit.framework.TestCase;

public class EchoFlowTest extends TestCase {

    public void testEcho() {
        assertEquals("hi", Echo.send("hi"));
    }

    public void testA4JRedirect() {
        testEcho();
        assertEquals("redirected", Echo.follow("/a4j"));
    }

    public void testEchoUnicode() {
        assertEquals("\u00e9", Echo.send("\u00e9"));
    }

    public void testKeepAlive() {
        assertTrue(Echo.ping());
    }
}

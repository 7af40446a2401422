package com.acme.legacy;

import junit.framework.TestCase;

public class MiniXmlTest extends TestCase {

    protected void setUp() throws Exception {
        super.setUp();
    }

    public void testElement() {
        assertEquals(1, work(1));
    }

    public void testAttributes() {
        assertEquals(2, work(2));
    }

    public void testEntities() {
        assertEquals(3, work(3));
    }

    public void testNesting() {
        assertEquals(4, work(4));
    }

    private int parse(int x) {
        return x;
    }

    private int work(int x) {
        return x;
    }
}

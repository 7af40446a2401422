package com.acme.legacy;

import junit.framework.Test;
import junit.framework.TestSuite;

public class SuiteEverything {

    public static Test suite() {
        TestSuite suite = new TestSuite("legacy");
        suite.addTestSuite(QueueCompatTest.class);
        suite.addTestSuite(StackCompatTest.class);
        suite.addTestSuite(LedgerMathTest.class);
        return suite;
    }
}

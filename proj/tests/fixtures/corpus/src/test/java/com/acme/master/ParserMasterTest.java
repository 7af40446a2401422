package com.acme.master;

import org.junit.Test;
import static org.junit.Assert.assertEquals;

public class ParserMasterTest {

    @Test
    public void all() {
        literals();
        operators();
        precedence();
        parentheses();
        errorRecovery();
    }

    private void literals() {
        assertEquals(7, Parser.eval("7"));
    }

    private void operators() {
        assertEquals(9, Parser.eval("4+5"));
    }

    private void precedence() {
        assertEquals(14, Parser.eval("2+3*4"));
    }

    private void parentheses() {
        assertEquals(20, Parser.eval("(2+3)*4"));
    }

    private void errorRecovery() {
        assertEquals(0, Parser.eval(""));
    }
}

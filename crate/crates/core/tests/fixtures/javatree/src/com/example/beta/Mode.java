package com.example.beta;

public enum Mode {
    IDLE,
    RUNNING,
    HALTED;

    public boolean live() {
        return this != HALTED;
    }
}

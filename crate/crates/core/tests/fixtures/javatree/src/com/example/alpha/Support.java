package com.example.alpha;

class Support {
    static final char OPEN = '{';

    String banner() {
        return "public class Banner { }";
    }
}

interface Callback {
    void changed(Support source);
}

"""Free reduction and bookkeeping for words in two generators.

Words are strings over A, B, a, b where lower case marks the inverse
letter.  The enumeration scheme itself only ever emits positive letters;
inverse letters show up in conjugators and oracles.
"""

LETTERS = "ABab"


def invert_letter(x):
    return x.swapcase()


def reduce_word(w):
    """Free reduction: cancel adjacent inverse pairs until none remain."""
    out = []
    for x in w:
        if out and out[-1] == x.swapcase():
            out.pop()
        else:
            out.append(x)
    return "".join(out)


def invert_word(w):
    return "".join(x.swapcase() for x in reversed(w))


def letterwise_inverse(w):
    """Invert each letter in place, keeping the order."""
    return w.swapcase()


def is_reduced(w):
    return all(w[i] != w[i + 1].swapcase() for i in range(len(w) - 1))


def is_palindrome(w):
    return w == w[::-1]


def conjugate(w, by):
    """by * w * by^-1, freely reduced."""
    return reduce_word(by + w + invert_word(by))


def reduced_words(max_len, alphabet=LETTERS):
    """All nonempty freely reduced words of length at most max_len,
    in breadth-first order."""
    level = [x for x in alphabet]
    for w in level:
        yield w
    for _ in range(max_len - 1):
        nxt = []
        for w in level:
            last = w[-1]
            for x in alphabet:
                if x != last.swapcase():
                    nxt.append(w + x)
        for w in nxt:
            yield w
        level = nxt

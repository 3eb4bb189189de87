"""Rationals, Farey parents, and the palindromic word enumeration.

Every nonnegative rational p/q in lowest terms (1/0 included) names one
conjugacy class of primitive elements in the rank-two free group.  The
base assignments are A at 0/1 and B at 1/0, so a word for p/q carries
q letters A and p letters B.
"""

import math
from collections import namedtuple

from .const import InvariantError
from . import words


class RationalLabel:
    """p/q in lowest terms with p, q >= 0, including 1/0."""

    def __init__(self, p, q):
        p = int(p)
        q = int(q)
        if p < 0 or q < 0:
            raise ValueError("negative labels are out of scope")
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a label")
        if math.gcd(p, q) != 1:
            raise ValueError("label must be in lowest terms")
        self.p = p
        self.q = q

    @classmethod
    def parse(cls, text):
        parts = text.strip().split("/")
        if len(parts) != 2:
            raise ValueError("label must look like p/q")
        return cls(int(parts[0]), int(parts[1]))

    @property
    def length(self):
        """Letter count p + q of the associated word."""
        return self.p + self.q

    def __eq__(self, other):
        return isinstance(other, RationalLabel) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "RationalLabel(%d, %d)" % (self.p, self.q)

    def __str__(self):
        return "%d/%d" % (self.p, self.q)


FareyParents = namedtuple("FareyParents", ["left", "right"])

_BASES = ((0, 1), (1, 0), (1, 1))


def _parents(p, q):
    # Stern-Brocot descent; (1, 1) gets the root bounds
    lo = (0, 1)
    hi = (1, 0)
    while True:
        med = (lo[0] + hi[0], lo[1] + hi[1])
        if med == (p, q):
            return lo, hi
        if p * med[1] < med[0] * q:
            hi = med
        else:
            lo = med


def farey_parents(x):
    """The unique unimodular pair of rationals whose mediant is x."""
    if (x.p, x.q) in _BASES:
        raise ValueError("%s has no parents" % x)
    (l, m), (r, s) = _parents(x.p, x.q)
    return FareyParents(RationalLabel(l, m), RationalLabel(r, s))


def continued_fraction(x):
    """Euclidean expansion [a0, a1, ...]; canonical, last entry >= 2
    unless the whole expansion is a single entry."""
    if x.q == 0:
        raise ValueError("1/0 has no continued fraction expansion")
    out = []
    a, b = x.p, x.q
    while b:
        out.append(a // b)
        a, b = b, a % b
    return out


class PrimitiveWord:
    """A positive word over {A, B} together with its label."""

    def __init__(self, letters, label):
        self.letters = letters
        self.label = label

    def is_palindrome(self):
        return words.is_palindrome(self.letters)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return "PrimitiveWord(%r, %s)" % (self.letters, self.label)


_WORD_MEMO = {(0, 1): "A", (1, 0): "B"}


def _word_letters(p, q):
    try:
        return _WORD_MEMO[(p, q)]
    except KeyError:
        pass
    (l, m), (r, s) = _parents(p, q)
    wl = _word_letters(l, m)
    wr = _word_letters(r, s)
    if (p + q) % 2 == 1:
        # odd steps: exactly one concatenation order is a palindrome
        pal = [w for w in (wl + wr, wr + wl) if words.is_palindrome(w)]
        if len(pal) != 1:
            raise InvariantError(
                "palindrome tie-break failed at %d/%d: %d candidates"
                % (p, q, len(pal)))
        out = pal[0]
    else:
        # even steps: lower parent first; the reversed product is the
        # conjugate partner, not this word
        out = wl + wr
    _WORD_MEMO[(p, q)] = out
    return out


def primitive_word(x):
    """The enumerated representative word for the label x."""
    return PrimitiveWord(_word_letters(x.p, x.q), x)


def conjugate_partner(x):
    """For even-length labels, the reversed product of the parent words.

    It is conjugate to the main word by the right parent word.
    """
    if x.length % 2 == 1:
        raise ValueError("partner defined only for even labels")
    (l, m), (r, s) = _parents(x.p, x.q)
    wl = _word_letters(l, m)
    wr = _word_letters(r, s)
    partner = wr + wl
    main = _word_letters(x.p, x.q)
    if words.conjugate(main, wr) != partner:
        raise InvariantError("partner of %s is not a conjugate" % x)
    return PrimitiveWord(partner, x)


def palindrome_decomposition(w):
    """Split an odd palindrome as (flank, center letter, reversed flank).

    Returns None for even-length words.
    """
    letters = w.letters if isinstance(w, PrimitiveWord) else w
    n = len(letters)
    if n % 2 == 0:
        return None
    if not words.is_palindrome(letters):
        raise ValueError("word is not a palindrome")
    half = n // 2
    return letters[:half], letters[half], letters[half + 1:]


def labels_up_to(max_sum):
    """All labels with p + q <= max_sum, ordered by sum then value."""
    out = []
    for total in range(1, max_sum + 1):
        row = []
        for q in range(total + 1):
            p = total - q
            if math.gcd(p, q) == 1:
                row.append(RationalLabel(p, q))
        row.sort(key=lambda x: (x.p / x.q if x.q else float("inf")))
        out.extend(row)
    return out

"""Words, eventually periodic sequences, and the exact 2^-k shift metric.

A *word* is a plain tuple of nonnegative ints (alphabet indices).  An
eventually periodic point u . w^inf is an :class:`EpSeq` held in canonical
form, so structural equality of canonical forms decides equality of the
underlying symbol streams.  All indexing of streams is 0-based internally;
the metric exponent ``min{k : x_k != y_k}`` is 1-based, matching the usual
convention, so ``rho`` returns ``2**-(i+1)`` when streams first differ at
internal index ``i``.

Everything here is immutable and pure; values can be shared freely across
concurrent tasks.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import ValidationError

LESS, EQUAL, GREATER = -1, 0, 1

#: rendering of the Dyck alphabet 0,1,2,3
DYCK_CHARS = "[]()"


def primitive_root(word):
    """Return ``(root, multiplicity)`` with ``word == root * multiplicity``.

    The root is the shortest word whose power gives ``word`` (KMP failure
    function).  Requires ``len(word) >= 1``.
    """
    w = tuple(word)
    n = len(w)
    if n == 0:
        raise ValidationError("empty word has no primitive root")
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    if n % p == 0:
        return w[:p], n // p
    return w, 1


class EpSeq:
    """Canonical eventually periodic sequence ``preperiod . period^inf``.

    Canonical means the period is primitive and the preperiod is minimal
    (its last symbol differs from the one the rotated period would place
    there).  The period is stored as a rotation offset into a shared base
    tuple, so shifting a purely periodic point is O(1) and a full orbit of
    n rotations costs O(n) memory rather than O(n^2).

    Two canonical values are equal iff their symbol streams agree up to
    ``max(|pre1|, |pre2|) + lcm(|per1|, |per2|)``; by Fine and Wilf the
    tighter bound ``max(|pre|) + |per1| + |per2|`` already decides, and the
    scanning helpers below use it.
    """

    __slots__ = ("pre", "_base", "_off", "_hash")

    def __init__(self, preperiod, period):
        pre = list(preperiod)
        per = tuple(period)
        if not per:
            raise ValidationError("period must be nonempty")
        for s in pre:
            if not isinstance(s, int) or s < 0:
                raise ValidationError("symbols are nonnegative integers")
        for s in per:
            if not isinstance(s, int) or s < 0:
                raise ValidationError("symbols are nonnegative integers")
        base, _ = primitive_root(per)
        off = 0
        L = len(base)
        while pre and pre[-1] == base[(off - 1) % L]:
            pre.pop()
            off = (off - 1) % L
        self.pre = tuple(pre)
        self._base = base
        self._off = off
        self._hash = None

    @classmethod
    def _raw(cls, pre, base, off):
        # trusted constructor: arguments already canonical
        obj = cls.__new__(cls)
        obj.pre = pre
        obj._base = base
        obj._off = off
        obj._hash = None
        return obj

    @classmethod
    def periodic(cls, word):
        """The purely periodic point word^inf."""
        return cls((), word)

    @classmethod
    def constant(cls, symbol):
        return cls((), (symbol,))

    # -- structure ---------------------------------------------------------

    @property
    def period_len(self):
        return len(self._base)

    @property
    def preperiod_len(self):
        return len(self.pre)

    @property
    def is_periodic(self):
        """True when the preperiod is empty (the point is purely periodic)."""
        return not self.pre

    @property
    def period(self):
        """The period as a materialized tuple (O(period_len))."""
        return self._base[self._off:] + self._base[: self._off]

    def minimal_period(self):
        if self.pre:
            raise ValidationError("minimal period is defined for purely periodic points")
        return len(self._base)

    def at(self, i):
        """Symbol at 0-based stream index ``i``."""
        pre = self.pre
        if i < len(pre):
            return pre[i]
        base = self._base
        return base[(self._off + i - len(pre)) % len(base)]

    def prefix(self, n):
        """First ``n`` symbols as a tuple."""
        pre = self.pre
        if n <= len(pre):
            return pre[:n]
        per = self.period
        need = n - len(pre)
        reps = need // len(per) + 1
        return (pre + per * reps)[:n]

    def shift(self, k):
        """Canonical form of the k-fold shift (drop the first k symbols)."""
        if k < 0:
            raise ValidationError("shift amount must be nonnegative")
        if k == 0:
            return self
        pre = self.pre
        if k < len(pre):
            return EpSeq._raw(pre[k:], self._base, self._off)
        L = len(self._base)
        off = (self._off + k - len(pre)) % L
        return EpSeq._raw((), self._base, off)

    def orbit(self):
        """All shifts of a purely periodic point, in phase order."""
        if self.pre:
            raise ValidationError("orbit enumeration requires a purely periodic point")
        L = len(self._base)
        return [EpSeq._raw((), self._base, (self._off + j) % L) for j in range(L)]

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, EpSeq):
            return NotImplemented
        if self.pre != other.pre:
            return False
        L = len(self._base)
        if L != len(other._base):
            return False
        if self._base is other._base or self._base == other._base:
            return self._off == other._off
        a, b, oa, ob = self._base, other._base, self._off, other._off
        return all(a[(oa + i) % L] == b[(ob + i) % L] for i in range(L))

    def __hash__(self):
        if self._hash is None:
            L = len(self._base)
            probe = tuple(self._base[(self._off + i) % L] for i in range(min(L, 24)))
            self._hash = hash((self.pre, L, probe))
        return self._hash

    def __repr__(self):
        return "EpSeq(%r)" % (seq_to_text(self),)


def _scan_bound(x, y):
    # Fine-Wilf: agreement past this index forces equality of canonical forms
    p, q = x.period_len, y.period_len
    return max(x.preperiod_len, y.preperiod_len) + p + q - gcd(p, q)


def rho(x, y):
    """Exact shift metric ``2^-k`` with k the 1-based first disagreement.

    Returns ``Fraction(0)`` iff the canonical forms are equal.
    """
    if x is y or x == y:
        return Fraction(0)
    for i in range(_scan_bound(x, y)):
        if x.at(i) != y.at(i):
            return Fraction(1, 2 ** (i + 1))
    return Fraction(0)  # unreachable for canonical values


def first_disagreement(x, y):
    """0-based index of the first differing symbol, or None when equal."""
    if x is y or x == y:
        return None
    for i in range(_scan_bound(x, y)):
        if x.at(i) != y.at(i):
            return i
    return None


def lex_compare(a, b):
    """Lexicographic comparison returning LESS / EQUAL / GREATER.

    Accepts two streams (:class:`EpSeq`) or two finite words (tuples).  For
    words the prefix order is used: a proper prefix compares LESS.
    """
    if isinstance(a, EpSeq) and isinstance(b, EpSeq):
        i = first_disagreement(a, b)
        if i is None:
            return EQUAL
        return LESS if a.at(i) < b.at(i) else GREATER
    if isinstance(a, EpSeq) or isinstance(b, EpSeq):
        raise ValidationError("lex_compare arguments must both be words or both streams")
    a, b = tuple(a), tuple(b)
    for x, y in zip(a, b):
        if x != y:
            return LESS if x < y else GREATER
    if len(a) == len(b):
        return EQUAL
    return LESS if len(a) < len(b) else GREATER


def shift(x, k):
    """Module-level alias for :meth:`EpSeq.shift`."""
    return x.shift(k)


# -- text encoding ----------------------------------------------------------
#
# Symbols 0-9 render as digits; symbols >= 10 as comma-separated decimal
# integers inside one angle-bracket group, e.g. (0, 12, 13, 1) -> "0<12,13>1".
# Dyck words may use the four bracket characters instead of digits 0-3.
# An EpSeq renders as  preperiod(period)^inf ; inside that form only the
# digit/angle encoding is accepted (brackets would be ambiguous).

_TOKEN = re.compile(r"<[0-9, ]+>|.")


def word_to_text(word, dyck=False):
    if dyck:
        return "".join(DYCK_CHARS[s] for s in word)
    out = []
    group = []
    for s in word:
        if s >= 10:
            group.append(str(s))
        else:
            if group:
                out.append("<" + ",".join(group) + ">")
                group = []
            out.append(str(s))
    if group:
        out.append("<" + ",".join(group) + ">")
    return "".join(out)


def word_from_text(text, dyck=False):
    text = text.strip()
    out = []
    for tok in _TOKEN.findall(text):
        if tok.startswith("<"):
            for part in tok[1:-1].split(","):
                part = part.strip()
                if part:
                    out.append(int(part))
        elif tok.isdigit():
            out.append(int(tok))
        elif dyck and tok in DYCK_CHARS:
            out.append(DYCK_CHARS.index(tok))
        elif tok in DYCK_CHARS:
            out.append(DYCK_CHARS.index(tok))
        elif tok.isspace():
            continue
        else:
            raise ValidationError("cannot parse symbol %r" % tok)
    return tuple(out)


_SEQ_FORM = re.compile(r"^(?P<pre>[^()]*)\((?P<per>[^()]+)\)\^inf$")


def seq_to_text(x):
    return "%s(%s)^inf" % (word_to_text(x.pre), word_to_text(x.period))


def seq_from_text(text):
    m = _SEQ_FORM.match(text.strip())
    if not m:
        raise ValidationError("expected 'preperiod(period)^inf', got %r" % text)
    return EpSeq(word_from_text(m.group("pre")), word_from_text(m.group("per")))


def parse_point_or_word(text):
    """Parse either an EpSeq form or a bare word (returned as a tuple)."""
    if "^inf" in text:
        return seq_from_text(text)
    return word_from_text(text)

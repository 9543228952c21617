"""Hook factorization of words, the statistics lec and pix, and the
rotation classes of desarrangements.

Every nonempty word splits uniquely as u h_1 h_2 ... h_k where u is a
weakly increasing prefix (possibly empty) and each hook h starts with a
strict drop followed by a weakly increasing tail.  pix is the length of
u, lec the total number of inversions inside the hooks.

A desarrangement is a word whose initial strictly decreasing run ends
at an even position (the run's last letter is the leftmost trough).
Rotating a desarrangement one step to the right changes lec by 0 or 1;
class A0 keeps lec, class B0 drops it by one.  A word is in class A1 or
B1 when its left rotation is in A0 or B0.  classify returns the tag by
those lec comparisons alone and None when neither pattern applies, so
it is total; which families are guaranteed to be tagged is a statement
tested in the enumeration suite, not enforced here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perms import inv_count

Word = tuple[int, ...]


@dataclass(frozen=True)
class HookFactorization:
    prefix: Word
    hooks: tuple[Word, ...]

    def concat(self) -> Word:
        out = list(self.prefix)
        for h in self.hooks:
            out.extend(h)
        return tuple(out)

    @property
    def pix(self) -> int:
        return len(self.prefix)

    @property
    def lec(self) -> int:
        return sum(inv_count(h) for h in self.hooks)

    def __str__(self):
        pieces = ["".join(map(str, self.prefix))] if self.prefix else [""]
        pieces.extend("".join(map(str, h)) for h in self.hooks)
        return "|" + "|".join(p for p in pieces if p or len(pieces) == 1) + "|"


def hook_factorize(w: Sequence[int]) -> HookFactorization:
    """The unique factorization of a nonempty word into prefix and hooks.

    Strip the maximal weakly increasing suffix; unless it is the whole
    remaining word, the letter just before it is strictly greater and
    heads the next hook.  Repeat on what is left.

    >>> f = hook_factorize((1,2,4,5,6,4,5,6,4,1,3,6,5,5,4,6,1,1,4,5,1,1))
    >>> f.prefix
    (1, 2, 4, 5)
    >>> [len(h) for h in f.hooks]
    [4, 3, 2, 2, 4, 3]
    >>> f.pix, f.lec
    (4, 11)
    """
    if not w:
        raise ValueError("empty word has no hook factorization")
    rest = list(w)
    hooks: list[Word] = []
    while rest:
        i = len(rest) - 1
        while i > 0 and rest[i - 1] <= rest[i]:
            i -= 1
        if i == 0:
            return HookFactorization(tuple(rest), tuple(reversed(hooks)))
        hooks.append(tuple(rest[i - 1:]))
        del rest[i - 1:]
    return HookFactorization((), tuple(reversed(hooks)))


def lec(w: Sequence[int]) -> int:
    """Sum of inversion numbers of the hooks of w.

    >>> lec((2, 1, 4, 3))
    2
    """
    return hook_factorize(w).lec


def pix(w: Sequence[int]) -> int:
    """Length of the weakly increasing prefix of the factorization."""
    return hook_factorize(w).pix


def is_desarrangement(w: Sequence[int]) -> bool:
    """True when the leftmost trough sits at an even position.

    The trough is the end of the initial strictly decreasing run, with
    an implicit +infinity appended after the word.

    >>> is_desarrangement((2, 1)), is_desarrangement((3, 1, 2))
    (True, True)
    >>> is_desarrangement((1, 3, 2))
    False
    """
    if not w:
        return False
    run = 1
    while run < len(w) and w[run - 1] > w[run]:
        run += 1
    return run % 2 == 0


def left_rotate(w: Sequence[int]) -> Word:
    """w_2 w_3 ... w_n w_1."""
    w = tuple(w)
    return w[1:] + w[:1] if w else w


def right_rotate(w: Sequence[int]) -> Word:
    """w_n w_1 w_2 ... w_{n-1}."""
    w = tuple(w)
    return w[-1:] + w[:-1] if w else w


def classify(w: Sequence[int]) -> str | None:
    """Rotation class tag A0, B0, A1, B1, or None.

    Desarrangements are tagged by how right rotation changes lec (A0 for
    no change, B0 for a drop of one).  Other words are tagged A1 or B1
    when their left rotation is a desarrangement tagged A0 or B0.

    >>> classify((2, 1, 4, 3))
    'B0'
    >>> classify((1, 3, 2)) is None
    True
    """
    w = tuple(w)
    if not w:
        return None
    if is_desarrangement(w):
        drop = lec(w) - lec(right_rotate(w))
        return {0: "A0", 1: "B0"}.get(drop)
    v = left_rotate(w)
    if is_desarrangement(v):
        drop = lec(v) - lec(w)
        return {0: "A1", 1: "B1"}.get(drop)
    return None

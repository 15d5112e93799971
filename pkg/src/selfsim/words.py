"""Finite words, eventually periodic rays and left-infinite post-critical words.

Words are tuples of letter tokens (strings).  Rays are right-infinite
``preperiod . period^inf`` and post-critical words are left-infinite
``^inf period . suffix``; both are kept in a canonical form so that
equality and hashing are exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple


def primitive_root(word: Sequence[str]) -> tuple:
    """Shortest ``r`` with ``word == r * k``."""
    w = tuple(word)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


def is_rotation(a: Sequence[str], b: Sequence[str]) -> bool:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    return any(a[i:] + a[:i] == b for i in range(len(a))) if a else True


def fmt_word(word: Sequence[str]) -> str:
    word = tuple(word)
    if all(len(s) == 1 for s in word):
        return "".join(word)
    return ".".join(word)


def parse_word(text: str, alphabet: Sequence[str] | None = None) -> tuple:
    """Inverse of :func:`fmt_word`; dotted form when letters are longer than one char."""
    if text == "":
        return ()
    if "." in text:
        return tuple(text.split("."))
    if alphabet is not None and any(len(s) != 1 for s in alphabet):
        k = len(alphabet[0])
        if any(len(s) != k for s in alphabet):
            raise ValueError(f"ambiguous word {text!r} over mixed-length alphabet")
        return tuple(text[i:i + k] for i in range(0, len(text), k))
    return tuple(text)


@dataclass(frozen=True, order=True)
class Ray:
    """Eventually periodic right-infinite word ``preperiod . period period ...``.

    Construct through :meth:`make` to get the canonical representative
    (primitive period, shortest preperiod).
    """

    preperiod: tuple
    period: tuple

    @classmethod
    def make(cls, preperiod: Iterable[str], period: Iterable[str]) -> "Ray":
        pre = tuple(preperiod)
        per = primitive_root(tuple(period))
        if not per:
            raise ValueError("ray period must be non-empty")
        while pre and pre[-1] == per[-1]:
            per = per[-1:] + per[:-1]
            pre = pre[:-1]
        return cls(pre, per)

    def prefix(self, n: int) -> tuple:
        out = list(self.preperiod[:n])
        i = 0
        while len(out) < n:
            out.append(self.period[i % len(self.period)])
            i += 1
        return tuple(out)

    def letter(self, i: int) -> str:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def shift(self, n: int = 1) -> "Ray":
        pre = self.preperiod
        per = self.period
        if n <= len(pre):
            return Ray.make(pre[n:], per)
        k = (n - len(pre)) % len(per)
        return Ray.make((), per[k:] + per[:k])

    def prepend(self, word: Sequence[str]) -> "Ray":
        return Ray.make(tuple(word) + self.preperiod, self.period)

    def is_cofinal(self, other: "Ray") -> bool:
        return is_rotation(self.period, other.period)

    def to_json(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}

    @classmethod
    def from_json(cls, obj: dict) -> "Ray":
        return cls.make(obj.get("preperiod", []), obj["period"])

    def __str__(self) -> str:
        return f"{fmt_word(self.preperiod)}({fmt_word(self.period)})^inf"


@dataclass(frozen=True, order=True)
class PostCriticalWord:
    """Left-infinite word ``... period period . suffix``."""

    period: tuple
    suffix: tuple

    @classmethod
    def make(cls, period: Iterable[str], suffix: Iterable[str] = ()) -> "PostCriticalWord":
        per = primitive_root(tuple(period))
        suf = tuple(suffix)
        if not per:
            raise ValueError("post-critical period must be non-empty")
        while suf and suf[0] == per[0]:
            per = per[1:] + per[:1]
            suf = suf[1:]
        return cls(per, suf)

    def last(self, n: int) -> tuple:
        """Length-``n`` suffix."""
        if n <= len(self.suffix):
            return self.suffix[len(self.suffix) - n:] if n else ()
        k = n - len(self.suffix)
        per = self.period
        reps = -(-k // len(per))
        head = (per * reps)[len(per) * reps - k:]
        return head + self.suffix

    def drop_last(self) -> "PostCriticalWord":
        if self.suffix:
            return PostCriticalWord.make(self.period, self.suffix[:-1])
        per = self.period
        return PostCriticalWord.make(per[-1:] + per[:-1], ())

    def __str__(self) -> str:
        if self.suffix:
            return f"^inf {fmt_word(self.period)} {fmt_word(self.suffix)}"
        return f"^inf {fmt_word(self.period)}"

    def to_json(self) -> dict:
        return {"period": list(self.period), "suffix": list(self.suffix)}

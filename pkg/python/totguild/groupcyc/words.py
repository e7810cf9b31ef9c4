"""Reduced words in a free group, conjugacy and primitive roots."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from totguild.response import DimensionMismatchError, InputError, PreconditionError

# (generator index, exponent ±1)
Letter = Tuple[int, int]

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def _letter_key(letter: Letter) -> Tuple[int, int]:
    # a < A < b < B < ...
    g, e = letter
    return (g, 0 if e > 0 else 1)


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for g, e in letters:
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


class FreeWord:
    """A freely reduced word in the free group of the given rank."""

    __slots__ = ("rank", "letters")

    def __init__(self, rank: int, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for g, e in letters:
            if not 0 <= g < rank or e not in (1, -1):
                raise InputError(f"letter ({g}, {e}) outside the free group of rank {rank}")
        self.rank = rank
        self.letters = _reduce(letters)

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, g: int) -> "FreeWord":
        return cls(rank, [(g, 1)])

    @classmethod
    def parse(cls, text: str, rank: Optional[int] = None) -> "FreeWord":
        """``a``, ``b``, ... are generators and capitals their inverses; ``1`` is the identity."""
        text = text.strip()
        letters = []
        if text not in ("", "1"):
            for ch in text:
                if ch.lower() not in _ALPHABET:
                    raise InputError(f"invalid letter {ch!r} in word {text!r}")
                letters.append((_ALPHABET.index(ch.lower()), 1 if ch.islower() else -1))
        needed = max((g + 1 for g, _ in letters), default=0)
        if rank is None:
            rank = max(needed, 1)
        return cls(rank, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def _check(self, other: "FreeWord") -> None:
        if other.rank != self.rank:
            raise DimensionMismatchError(
                f"words live in free groups of rank {self.rank} and {other.rank}"
            )

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._check(other)
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, [(g, -e) for g, e in reversed(self.letters)])

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(k))

    def conjugate(self, h: "FreeWord") -> "FreeWord":
        """``h⁻¹ w h``."""
        return h.inverse() * self * h

    def sort_key(self) -> Tuple:
        return (len(self.letters), tuple(_letter_key(x) for x in self.letters))

    def abelianization(self) -> List[int]:
        out = [0] * self.rank
        for g, e in self.letters:
            out[g] += e
        return out

    def cyclic_reduction(self) -> Tuple["FreeWord", "FreeWord"]:
        """``(core, p)`` with ``self = p core p⁻¹`` and ``core`` cyclically reduced."""
        letters = self.letters
        i, j = 0, len(letters) - 1
        while i < j and letters[i] == (letters[j][0], -letters[j][1]):
            i += 1
            j -= 1
        core = FreeWord(self.rank, letters[i: j + 1])
        return core, FreeWord(self.rank, letters[:i])

    def is_cyclically_reduced(self) -> bool:
        return self.cyclic_reduction()[1].is_identity()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.rank, self.letters))

    def __lt__(self, other: "FreeWord") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(
            _ALPHABET[g] if e > 0 else _ALPHABET[g].upper() for g, e in self.letters
        )

    def __repr__(self) -> str:
        return f"FreeWord({str(self)!r}, rank={self.rank})"


@dataclass(frozen=True)
class ConjugatorWitness:
    source: FreeWord
    target: FreeWord
    conjugator: FreeWord

    def verify(self) -> bool:
        return self.source.conjugate(self.conjugator) == self.target


@dataclass(frozen=True)
class ConjClassRep:
    """Canonical basepoint of a conjugacy class: ``representative = root^exponent``."""

    representative: FreeWord
    root: FreeWord
    exponent: int


def canonical_form(w: FreeWord) -> Tuple[FreeWord, FreeWord]:
    """``(c, h)`` with ``c`` the least rotation of the cyclic core and ``w^h = c``."""
    core, p = w.cyclic_reduction()
    letters = core.letters
    n = len(letters)
    if n == 0:
        return core, p
    best = min(range(n), key=lambda i: [_letter_key(x) for x in letters[i:] + letters[:i]])
    x = FreeWord(w.rank, letters[:best])
    c = FreeWord(w.rank, letters[best:] + letters[:best])
    return c, p * x


def primitive_root(y: FreeWord) -> Tuple[FreeWord, int]:
    """``(x, k)`` with ``y = x^k`` and ``x`` not a proper power."""
    if y.is_identity():
        raise PreconditionError("the identity has no primitive root")
    core, p = y.cyclic_reduction()
    letters = core.letters
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters == letters[:d] * (n // d):
            root = FreeWord(y.rank, letters[:d])
            return p * root * p.inverse(), n // d
    raise AssertionError("unreachable: the whole core is a period")


def conjugacy_class_rep(w: FreeWord) -> ConjClassRep:
    c, _ = canonical_form(w)
    if c.is_identity():
        return ConjClassRep(c, c, 1)
    root, k = primitive_root(c)
    return ConjClassRep(c, root, k)


@dataclass(frozen=True)
class ConjugacyResult:
    rep_u: FreeWord
    rep_v: FreeWord
    conjugate: bool
    witness: Optional[ConjugatorWitness] = None


def free_reduce_and_conjugacy(u: FreeWord, v: FreeWord) -> ConjugacyResult:
    """Decide whether ``u`` and ``v`` are conjugate, with a witness when they are."""
    if u.rank != v.rank:
        raise DimensionMismatchError("words live in free groups of different rank")
    cu, hu = canonical_form(u)
    cv, hv = canonical_form(v)
    if cu != cv:
        return ConjugacyResult(cu, cv, False)
    witness = ConjugatorWitness(u, v, hu * hv.inverse())
    return ConjugacyResult(cu, cv, True, witness)


def words_up_to(rank: int, length: int) -> List[FreeWord]:
    """All reduced words of length at most ``length``, shortest first."""
    out = [FreeWord.identity(rank)]
    frontier: List[Tuple[Letter, ...]] = [()]
    letters = [(g, e) for g in range(rank) for e in (1, -1)]
    letters.sort(key=_letter_key)
    for _ in range(length):
        nxt = []
        for w in frontier:
            for x in letters:
                if w and w[-1] == (x[0], -x[1]):
                    continue
                nxt.append(w + (x,))
        out.extend(FreeWord(rank, w) for w in nxt)
        frontier = nxt
    return out


def conjugacy_classes_up_to(rank: int, length: int) -> List[ConjClassRep]:
    """Nontrivial classes whose canonical representative has length at most ``length``."""
    seen = {}
    for w in words_up_to(rank, length):
        if w.is_identity() or not w.is_cyclically_reduced():
            continue
        rep = conjugacy_class_rep(w)
        seen.setdefault(rep.representative, rep)
    return sorted(seen.values(), key=lambda r: r.representative.sort_key())

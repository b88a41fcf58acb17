"""
The Deligne-Kato formula for the nearby cycles of a sheaf on a relative curve over a henselian trait:

    dim Ψ⁰ - dim Ψ¹ = φ(s) - φ(η) - 2δ(H)·rank(F)

where φ(η) sums the total dimensions at the horizontal points and φ(s) those at the vertical points of a stable triple.
"""
from typing import List, Optional
from dataclasses import dataclass, field

from tktkt.util.printing import warn

from ..algebra.differentials import DifferentialForm
from ..errors import NegativeDimension, ZeroTensor


@dataclass
class HorizontalPointData:
    degree: int    # [κ(p):κ(η)]
    swan: int
    rank: int

    def __post_init__(self):
        if self.degree < 1 or self.swan < 0 or self.rank < 0:
            raise ValueError(f"Horizontal point data must be non-negative with degree ≥ 1, got {self}.")


@dataclass
class VerticalPointData:
    """
    Either a computed characteristic cycle together with the tame part (sw and rank of F̄_p), or the total dimension
    of Deligne's case given directly.
    """
    cc: Optional[DifferentialForm] = None
    tame_swan: int = 0
    tame_rank: int = 0
    deligne: Optional[int] = None
    level: int = 0       # the cc coefficient may live in F_p(u) with u^{p^level} = x.
    label: str = ""

    def __post_init__(self):
        if (self.cc is None) == (self.deligne is None):
            raise ValueError("A vertical point needs exactly one of a characteristic cycle and a Deligne value.")
        if self.tame_swan < 0 or self.tame_rank < 0:
            raise ValueError("Tame data must be non-negative.")

    def isComputed(self) -> bool:
        return self.cc is not None

    def rank(self) -> Optional[int]:
        """rank(F) at the point: the wild part carried by cc plus rank(F̄). Unknown for Deligne's case."""
        if not self.isComputed():
            return None
        return self.cc.power + self.tame_rank


@dataclass
class TripleDescription:
    delta: int
    rank: int
    psi0: int
    horizontal: List[HorizontalPointData] = field(default_factory=list)
    vertical: List[VerticalPointData] = field(default_factory=list)

    def __post_init__(self):
        if self.delta < 0 or self.rank < 0 or self.psi0 < 0:
            raise ValueError("δ(H), rank(F) and dim Ψ⁰ are non-negative.")

    def checkRanks(self):
        for i, point in enumerate(self.horizontal):
            if point.rank != self.rank:
                warn(f"Horizontal point {i} has rank {point.rank} while the sheaf has rank {self.rank}.")
        for i, point in enumerate(self.vertical):
            rank = point.rank()
            if rank is not None and rank != self.rank:
                warn(f"Vertical point {i} ({point.label or 'cc'}) has rank {rank} while the sheaf has rank {self.rank}.")

    @staticmethod
    def directSum(a: "TripleDescription", b: "TripleDescription") -> "TripleDescription":
        """The triple of F ⊕ F′ on the same (H, U): point data are added pointwise."""
        if a.delta != b.delta or len(a.horizontal) != len(b.horizontal) or len(a.vertical) != len(b.vertical):
            raise ValueError("Direct sums need the same curve and the same points.")
        horizontal = []
        for x, y in zip(a.horizontal, b.horizontal):
            if x.degree != y.degree:
                raise ValueError("Paired horizontal points must have the same residue degree.")
            horizontal.append(HorizontalPointData(x.degree, x.swan + y.swan, x.rank + y.rank))
        vertical = []
        for x, y in zip(a.vertical, b.vertical):
            if x.isComputed() and y.isComputed():
                vertical.append(VerticalPointData(cc=x.cc * y.cc, tame_swan=x.tame_swan + y.tame_swan,
                                                  tame_rank=x.tame_rank + y.tame_rank, level=max(x.level, y.level)))
            else:
                vertical.append(VerticalPointData(deligne=dimtotVertical(x) + dimtotVertical(y)))
        return TripleDescription(a.delta, a.rank + b.rank, a.psi0 + b.psi0, horizontal, vertical)


@dataclass
class NearbyReport:
    phi_s: int
    phi_eta: int
    psi0: int
    psi1: int
    delta: int
    rank: int

    def toJson(self) -> dict:
        return {"phi_s": self.phi_s, "phi_eta": self.phi_eta, "psi0": self.psi0, "psi1": self.psi1,
                "delta": self.delta, "rank": self.rank}


def dimtotHorizontal(d: HorizontalPointData) -> int:
    return d.degree * (d.swan + d.rank)


def ordOfTensor(T: DifferentialForm, level: int=0) -> int:
    """
    ord at x = 0 of α·(dx)^{⊗m}, which is ord(α) since ord(x) = 1. A coefficient in F_p(u) must lie in F.
    """
    if T.isZero():
        raise ZeroTensor("The zero tensor has no order.")
    if T.coefficient.variable != "x":
        T = T.descended(level)
    return T.coefficient.orderAtZero()


def dimtotVertical(d: VerticalPointData) -> int:
    """-ord(cc) + sw(F̄) + rank(F̄), or Deligne's value."""
    if not d.isComputed():
        return d.deligne
    return -ordOfTensor(d.cc, d.level) + d.tame_swan + d.tame_rank


def eulerNearby(T: TripleDescription) -> NearbyReport:
    T.checkRanks()
    phi_eta = sum(dimtotHorizontal(point) for point in T.horizontal)
    phi_s   = sum(dimtotVertical(point) for point in T.vertical)
    psi1 = T.psi0 - phi_s + phi_eta + 2*T.delta*T.rank
    if psi1 < 0:
        raise NegativeDimension(f"dim Ψ¹ = {T.psi0} - {phi_s} + {phi_eta} + 2·{T.delta}·{T.rank} = {psi1} < 0 "
                                f"for horizontal points {T.horizontal} and vertical points {T.vertical}.")
    return NearbyReport(phi_s, phi_eta, T.psi0, psi1, T.delta, T.rank)

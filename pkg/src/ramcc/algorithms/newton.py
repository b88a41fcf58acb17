"""
Newton polygons of polynomials over a discretely valued ring, given only the valuations of their coefficients.
"""
from typing import List, Optional, Sequence
from dataclasses import dataclass
from fractions import Fraction


@dataclass
class PolygonVertex:
    degree: int
    valuation: int


@dataclass
class PolygonSegment:
    start: PolygonVertex
    end: PolygonVertex

    def length(self) -> int:
        return self.end.degree - self.start.degree

    def slope(self) -> Fraction:
        return Fraction(self.end.valuation - self.start.valuation, self.length())

    def rootValuation(self) -> Fraction:
        """Every root belonging to this segment has this valuation."""
        return -self.slope()

    def contains(self, degree: int, valuation: int) -> bool:
        """Whether (degree, valuation) lies on the line through the segment, within its degree range."""
        if not self.start.degree <= degree <= self.end.degree:
            return False
        return (valuation - self.start.valuation)*self.length() == (self.end.valuation - self.start.valuation)*(degree - self.start.degree)


def newtonPolygon(valuations: Sequence[Optional[int]]) -> List[PolygonSegment]:
    """
    Lower convex hull of the points (k, v_k), where valuations[k] is None for a zero coefficient. Segments come out
    from left to right, i.e. from the largest root valuation to the smallest.
    """
    points = [PolygonVertex(k, v) for k, v in enumerate(valuations) if v is not None]
    hull: List[PolygonVertex] = []
    for point in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return [PolygonSegment(a, b) for a, b in zip(hull, hull[1:])]


def _cross(o: PolygonVertex, a: PolygonVertex, b: PolygonVertex) -> int:
    return (a.degree - o.degree)*(b.valuation - o.valuation) - (a.valuation - o.valuation)*(b.degree - o.degree)

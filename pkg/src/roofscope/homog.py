"""Numerical invariants of rational homogeneous varieties.

A marked diagram (D, I) stands for G/P(I).  Its Picard number is #I,
its dimension is #Phi+ - #Phi+_L where the Levi roots Phi+_L are the
positive roots supported on unmarked nodes, and the anticanonical class
is sigma = sum of the non-Levi positive roots, reported through the
pairings <sigma, alpha_i^vee> at the marked nodes.

Residual diagrams (after node removal) are evaluated inside the ambient
root system: the positive roots of an induced subdiagram are exactly the
ambient positive roots supported on the surviving nodes.  Unmarked
components contribute a point and drop out of all fiber analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynkin import MarkedDiagram, classify_components, remove_node
from .root_system import construct, pairing


@dataclass(frozen=True)
class VarietyInvariants:
    """Dimension, Picard number and anticanonical coefficients of G/P(I).

    ``index_vector`` lists (mark, coefficient) pairs with marks ascending;
    each coefficient is the pairing of -K against the coroot at that mark.
    """

    dim: int
    picard: int
    index_vector: tuple[tuple[int, int], ...]

    @property
    def index(self) -> int:
        """The Fano index; defined for Picard rank one."""
        if self.picard != 1:
            raise ValueError(
                "the scalar index is reserved for Picard rank one; "
                "use index_vector"
            )
        return self.index_vector[0][1]

    def coefficient(self, mark: int) -> int:
        for m, c in self.index_vector:
            if m == mark:
                return c
        raise KeyError(f"{mark} is not a mark")

    def coefficients(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.index_vector)


def gp_invariants(md: MarkedDiagram) -> VarietyInvariants:
    """Compute dim, Picard number and the anticanonical coefficient vector."""
    rs = construct(md.diagram.factors)
    alive = set(md.diagram.nodes)
    marks = sorted(md.marks)
    marked = set(marks)

    def support(beta):
        return {j + 1 for j, c in enumerate(beta) if c}

    sub = [b for b in rs.positive_roots if support(b) <= alive]
    levi_count = 0
    sigma = [0] * rs.rank
    for beta in sub:
        if support(beta) & marked:
            for j, c in enumerate(beta):
                sigma[j] += c
        else:
            levi_count += 1
    dim = len(sub) - levi_count
    vec = tuple((m, pairing(rs, sigma, m)) for m in marks)
    for _, c in vec:
        if c <= 0:  # -K is ample on G/P; a failure here is a programming error
            raise RuntimeError(f"non-positive index coefficient for {md}")
    return VarietyInvariants(dim=dim, picard=len(marks), index_vector=vec)


def point_components(md: MarkedDiagram):
    """Diagnostic: the connected components carrying no mark.

    Such components contribute a point to the variety and are dropped by
    all fiber analysis; this lists what was dropped.
    """
    return [
        shape
        for shape in classify_components(md.diagram)
        if not md.marks.intersection(shape.embedding)
    ]


def is_projective_space(md: MarkedDiagram) -> int | None:
    """Return r if the marked variety is the projective space P^{r-1}.

    The diagram must carry exactly one mark; unmarked components are
    points and are ignored.  The two recognized shapes are an A_m chain
    marked at either end (P^m) and a C_m chain marked at the short end,
    the node away from the arrow source (P^{2m-1}).
    """
    if len(md.marks) != 1:
        raise ValueError("projective-space detection expects exactly one mark")
    (mark,) = md.marks
    for shape in classify_components(md.diagram):
        if mark not in shape.embedding:
            continue
        pos = shape.position_of(mark)
        t = shape.type
        if t.letter == "A" and pos in (1, t.rank):
            return t.rank + 1
        if t.letter == "C" and pos == 1:
            return 2 * t.rank
        return None
    raise RuntimeError(f"mark {mark} not found in any component of {md}")


def fibration_fiber(md: MarkedDiagram, keep: int) -> MarkedDiagram:
    """The fiber of G/P({i,j}) -> G/P({keep}): the diagram minus ``keep``,
    marked at the other node."""
    if len(md.marks) != 2:
        raise ValueError("fibration analysis expects exactly two marks")
    if keep not in md.marks:
        raise ValueError(f"{keep} is not a mark of {md}")
    (other,) = md.marks - {keep}
    return MarkedDiagram(remove_node(md.diagram, keep), frozenset({other}))

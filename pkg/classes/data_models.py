from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from classes.exact_math import IntMatrix, IntVector
from classes.polytope import LatticePolytope


@dataclass(frozen=True)
class EPolynomial:
    """Coefficients c_0..c_{d-r} of E(Delta, t); c_q is h^q(O_V)"""
    coefficients: Tuple[int, ...]

    def evaluate(self, t: int) -> int:
        return sum(c * t ** q for q, c in enumerate(self.coefficients))

    def to_dict(self) -> Dict:
        return {'coefficients': list(self.coefficients)}


@dataclass(frozen=True)
class ChiTerms:
    """The four summands of the regrouped chi(Omega^1) formula"""
    ambient: int
    part_sums: int
    vertex_outside: int
    vertex_inside: int

    @property
    def total(self) -> int:
        return self.ambient + self.part_sums + self.vertex_outside + self.vertex_inside


@dataclass(frozen=True)
class ChiReport:
    """Euler characteristic of the sheaf of 1-forms"""
    chi_omega1: int
    term_structure: ChiTerms
    vertex_assignment_mode: str
    direct_value: int

    def to_dict(self) -> Dict:
        return {
            'chiOmega1': self.chi_omega1,
            'termStructure': {
                'chiOd': self.term_structure.ambient,
                'partSums': self.term_structure.part_sums,
                'vertexTermsOutsideJ': self.term_structure.vertex_outside,
                'vertexTermsInsideJ': self.term_structure.vertex_inside,
            },
            'vertexAssignmentMode': self.vertex_assignment_mode,
            'directValue': self.direct_value,
        }


@dataclass(frozen=True)
class HodgeReport:
    """h^{1,q} for q = 0..d-r, with the formula that produced them"""
    h_one_q: Tuple[int, ...]
    formula_used: str
    precondition_notes: str = ""

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** q * h for q, h in enumerate(self.h_one_q))

    def to_dict(self) -> Dict:
        return {
            'hOneQ': list(self.h_one_q),
            'formulaUsed': self.formula_used,
            'preconditionNotes': self.precondition_notes,
            'eulerCharacteristic': self.euler_characteristic,
        }


@dataclass(frozen=True)
class CIStatus:
    """Classification of a complete intersection from its Newton polytopes"""
    verdict: str
    max_independence: int
    h_vector: Optional[Tuple[int, ...]] = None
    vanishing_up_to: int = 0

    def to_dict(self) -> Dict:
        return {
            'verdict': self.verdict,
            'maxIndependence': self.max_independence,
            'hVector': list(self.h_vector) if self.h_vector is not None else None,
            'vanishingUpTo': self.vanishing_up_to,
        }


@dataclass(frozen=True)
class DecompositionComponent:
    index_subset: Tuple[int, ...]
    polytope: LatticePolytope
    lattice_basis: IntMatrix


@dataclass(frozen=True)
class DecompositionReport:
    """Irreducible components of a nef-partition and the lattice they generate"""
    components: Tuple[DecompositionComponent, ...]
    sublattice_index: int
    splits_over_z: bool

    def to_dict(self) -> Dict:
        return {
            'components': [
                {
                    'parts': [j + 1 for j in c.index_subset],
                    'dim': c.polytope.intrinsic_dim,
                    'vertices': [list(map(str, v)) for v in c.polytope.vertices],
                    'latticeBasis': [list(map(str, row)) for row in c.lattice_basis.to_rows()],
                }
                for c in self.components
            ],
            'sublatticeIndex': self.sublattice_index,
            'splitsOverZ': self.splits_over_z,
        }


@dataclass(frozen=True)
class SupportSets:
    """nabla_zero[i] = nabla_i ∩ V(Delta*), delta_zero[i] = Delta_i ∩ V(nabla*)"""
    nabla_zero: Tuple[Tuple[IntVector, ...], ...]
    delta_zero: Tuple[Tuple[IntVector, ...], ...]


@dataclass
class SuiteResult:
    """Outcome of one verification suite"""
    name: str
    status: str
    details: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {'name': self.name, 'status': self.status, 'details': list(self.details)}

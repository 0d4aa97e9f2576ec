from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from src.models.transport_models import rational_to_dict, rational_text


class CurvatureMethod(Enum):
    FLOW = "flow"
    SRG_FORMULA = "srg_formula"
    BOTH = "both"


@dataclass(frozen=True)
class Certificate:
    plan_cost: Fraction
    dual_value: Fraction
    gap_zero: bool
    matching_pairs: Optional[tuple] = None
    two_step_pairs: Optional[tuple] = None
    plan: Optional[object] = None
    potential: Optional[object] = None

    def to_dict(self):
        data = {
            'plan_cost': rational_to_dict(self.plan_cost),
            'dual_value': rational_to_dict(self.dual_value),
            'gap_zero': self.gap_zero
        }
        if self.plan is not None:
            data['replay'] = {
                'matching_pairs': [list(p) for p in self.matching_pairs],
                'two_step_pairs': [list(p) for p in self.two_step_pairs],
                'plan': self.plan.to_dict()['entries'],
                'potential': self.potential.to_dict()
            }
        return data


@dataclass(frozen=True)
class CurvatureReport:
    edge: tuple
    eps: Fraction
    w1: Fraction
    kappa_eps: Fraction
    condensed: Fraction
    method: CurvatureMethod
    certificate: Certificate
    matching_size: Optional[int] = None
    scaled: bool = False

    def to_dict(self):
        return {
            'edge': list(self.edge),
            'eps': rational_to_dict(self.eps),
            'w1': rational_to_dict(self.w1),
            'kappa_eps': rational_to_dict(self.kappa_eps),
            'condensed': rational_to_dict(self.condensed),
            'scaled': self.scaled,
            'method': self.method.value,
            'matching_size': self.matching_size,
            'certificate': self.certificate.to_dict()
        }

    def csv_row(self):
        return [
            self.edge[0], self.edge[1],
            self.condensed.numerator, self.condensed.denominator,
            self.method.value,
            '' if self.matching_size is None else self.matching_size,
            'true' if self.certificate.gap_zero else 'false'
        ]


CSV_COLUMNS = ['u', 'v', 'kappa_num', 'kappa_den', 'method', 'matching_size', 'gap_zero']


@dataclass
class CurvatureProfile:
    reports: list
    minimum: Optional[Fraction] = None
    maximum: Optional[Fraction] = None
    mean: Optional[Fraction] = None
    uniform: bool = True
    linearity: list = field(default_factory=list)

    def to_dict(self):
        def maybe(q):
            return None if q is None else rational_to_dict(q)

        data = {
            'edges': len(self.reports),
            'summary': {
                'min': maybe(self.minimum),
                'max': maybe(self.maximum),
                'mean': maybe(self.mean),
                'uniform': self.uniform
            },
            'reports': [r.to_dict() for r in self.reports]
        }
        if self.linearity:
            data['linearity'] = [s.to_dict() for s in self.linearity]
        return data


@dataclass(frozen=True)
class ScaledCurvature:
    eps: Fraction
    value: Fraction
    half_value: Fraction
    edge: Optional[tuple] = None

    @property
    def linear(self):
        return self.value == self.half_value

    def to_dict(self):
        return {
            'edge': None if self.edge is None else list(self.edge),
            'eps': rational_to_dict(self.eps),
            'scaled': rational_to_dict(self.value),
            'scaled_half_eps': rational_to_dict(self.half_value),
            'linear': self.linear
        }


@dataclass(frozen=True)
class RigidityReport:
    is_complete: bool
    min_edge_curvature: Optional[Fraction]
    consistent: bool

    def to_dict(self):
        return {
            'is_complete': self.is_complete,
            'min_edge_curvature': None if self.min_edge_curvature is None else rational_to_dict(self.min_edge_curvature),
            'consistent': self.consistent
        }


@dataclass
class ConjectureRow:
    q: int
    params: object
    perfect_matching_everywhere: bool
    curvature: Optional[Fraction]
    conjectured: Fraction
    uniform: bool = True

    @property
    def agrees(self):
        return self.uniform and self.curvature == self.conjectured

    def to_dict(self):
        return {
            'q': self.q,
            'params': self.params.to_dict(),
            'perfect_matching_everywhere': self.perfect_matching_everywhere,
            'curvature': None if self.curvature is None else rational_to_dict(self.curvature),
            'conjectured': rational_to_dict(self.conjectured),
            'uniform': self.uniform,
            'agrees': self.agrees
        }


@dataclass(frozen=True)
class MooreCheck:
    params: object
    girth: int
    meets_moore_bound: bool
    curvature: Fraction

    @property
    def nonnegative(self):
        return self.curvature >= 0

    def to_dict(self):
        return {
            'params': self.params.to_dict(),
            'girth': self.girth,
            'meets_moore_bound': self.meets_moore_bound,
            'curvature': rational_text(self.curvature),
            'nonnegative': self.nonnegative
        }


@dataclass
class VerifySummary:
    graphs: int = 0
    complete: int = 0
    inconsistent: list = field(default_factory=list)

    def to_dict(self):
        return {
            'graphs': self.graphs,
            'complete': self.complete,
            'inconsistent': list(self.inconsistent),
            'consistent': not self.inconsistent
        }

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from src.ricci_service.errors import PreconditionViolated


def parse_rational(text):
    """Parse 'N/D', 'N' or a Fraction into an exact Fraction"""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise PreconditionViolated(f"Invalid rational: {text!r}")


def rational_decimal(q, places=12):
    with localcontext() as ctx:
        ctx.prec = 40
        value = Decimal(q.numerator) / Decimal(q.denominator)
        return format(value.quantize(Decimal(1).scaleb(-places)).normalize(), 'f')


def rational_to_dict(q):
    q = Fraction(q)
    return {'num': q.numerator, 'den': q.denominator, 'decimal': rational_decimal(q)}


def rational_text(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class Measure:
    """Finitely supported probability measure with exact masses"""

    def __init__(self, masses):
        support = {}
        for vertex, mass in masses.items():
            mass = Fraction(mass)
            if mass < 0:
                raise PreconditionViolated(f"negative mass {mass} at vertex {vertex}")
            if mass:
                support[vertex] = mass
        total = sum(support.values(), Fraction(0))
        if total != 1:
            raise PreconditionViolated(f"masses sum to {total}, not 1")
        self.support = dict(sorted(support.items()))

    def __getitem__(self, vertex):
        return self.support.get(vertex, Fraction(0))

    def vertices(self):
        return list(self.support)

    def __eq__(self, other):
        return isinstance(other, Measure) and self.support == other.support

    def __repr__(self):
        return f"Measure({ {v: rational_text(m) for v, m in self.support.items()} })"


class TransportPlan:
    """Sparse coupling between two measures; zero entries are not stored"""

    def __init__(self, entries, source, target):
        self.entries = {pair: Fraction(mass) for pair, mass in sorted(entries.items()) if mass != 0}
        self.source = source
        self.target = target

    def row_marginal(self):
        rows = {}
        for (u, _), mass in self.entries.items():
            rows[u] = rows.get(u, Fraction(0)) + mass
        return rows

    def column_marginal(self):
        columns = {}
        for (_, v), mass in self.entries.items():
            columns[v] = columns.get(v, Fraction(0)) + mass
        return columns

    def perturbed(self, pair, delta):
        entries = dict(self.entries)
        entries[pair] = entries.get(pair, Fraction(0)) + Fraction(delta)
        return TransportPlan(entries, self.source, self.target)

    def triplets(self):
        return [(u, v, m.numerator, m.denominator) for (u, v), m in self.entries.items()]

    def to_dict(self):
        return {'entries': [list(t) for t in self.triplets()]}


class Potential:
    """Integer-valued vertex function on a finite domain"""

    def __init__(self, values):
        self.values = {}
        for vertex, value in sorted(values.items()):
            if int(value) != value:
                raise PreconditionViolated(f"potential value at {vertex} is not an integer: {value}")
            self.values[vertex] = int(value)

    def __getitem__(self, vertex):
        return self.values.get(vertex, 0)

    def domain(self):
        return list(self.values)

    def to_dict(self):
        return {str(v): f for v, f in self.values.items()}


@dataclass
class PlanCheck:
    ok: bool
    violations: list = field(default_factory=list)


@dataclass
class TransportSolution:
    value: Fraction
    plan: TransportPlan
    potential: Potential

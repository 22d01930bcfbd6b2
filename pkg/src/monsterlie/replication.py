"""Extension of trace-coefficient sequences by the replication recursions,
trivial-multiplicity computation, and the non-triviality report.

Writing C(g, j) for the trace of g on the weight-(j+1) graded piece of
the moonshine module, the four recursions determine C(g, 4) and every
C(g, j) for j > 5 from the seeds at 1, 2, 3, 5 and the squared class:

  C(g,4j)   = C(g,2j+1) + (C(g,j)^2 - C(g^2,j))/2
              + sum_{i=1}^{j-1} C(g,i) C(g,2j-i)

  C(g,4j+1) = C(g,2j+3) - C(g,2) C(g,2j)
              + (C(g,2j)^2 + C(g^2,2j))/2 + (C(g,j+1)^2 - C(g^2,j+1))/2
              + sum_{i=1}^{j}    C(g,i)   C(g,2j-i+2)
              + sum_{i=1}^{j-1}  C(g^2,i) C(g,4j-4i)
              + sum_{i=1}^{2j-1} (-1)^i C(g,i) C(g,4j-i)

  C(g,4j+2) = C(g,2j+2) + sum_{i=1}^{j} C(g,i) C(g,2j-i+1)

  C(g,4j+3) = C(g,2j+4) - C(g,2) C(g,2j+1) - (C(g,2j+1)^2 - C(g^2,2j+1))/2
              + sum_{i=1}^{j+1} C(g,i)   C(g,2j-i+3)
              + sum_{i=1}^{j}   C(g^2,i) C(g,4j-4i+2)
              + sum_{i=1}^{2j}  (-1)^i C(g,i) C(g,4j-i+2).

At index 5 the first recursion instance is vacuous (it reduces to
C(g,5) = C(g,5)), which is why 5 is a seed.  Every halving must be exact;
an odd numerator names the class and index and aborts, since it can only
mean inconsistent seed data.

Multiplicities come from character orthogonality: the multiplicity of
the k-th irreducible in the weight-(j+1) piece is
(1/|G|) sum over classes of size * chi_k * C(class, j), which must be a
nonnegative integer.  The trivial character needs no character table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qseries import IntegralityError, primary_dim_series


@dataclass
class CoefficientTable:
    """Per-class coefficient rows C(g, j) for 1 <= j <= order."""

    order: int
    rows: dict  # class name -> list, index j-1

    def value(self, name, j):
        """C(name, j); index 0 is 0 by convention (zero constant term) and
        index -1 is 1 (normalized leading coefficient)."""
        if j == 0:
            return 0
        if j == -1:
            return 1
        return self._at(name, j)

    def _at(self, name, j):
        if j < 1:
            raise IndexError(f"recursions never reference index {j}")
        if j > self.order:
            raise IndexError(f"index {j} beyond computed order {self.order}")
        return self.rows[name][j - 1]


def _halve(numerator, name, j):
    half, remainder = divmod(numerator, 2)
    if remainder:
        raise IntegralityError(
            f"replication: odd halving for class {name} at index {j}"
        )
    return half


def replicate_extend(dataset, order):
    """Fill every class row through the given order using the recursions.

    Rows are filled in lockstep across classes in increasing index, so the
    squared-class references (which only reach strictly smaller indices)
    are always available.
    """
    if order < 5:
        raise ValueError("order must be at least 5 (indices 1,2,3,5 are seeds)")
    rows = {}
    for record in dataset.classes:
        row = [None] * order
        for k in (1, 2, 3, 5):
            row[k - 1] = record.seeds[k]
        rows[record.name] = row
    square = {r.name: r.power2 for r in dataset.classes}

    def c(name, i):
        if i < 1:
            raise IndexError(f"recursions never reference index {i}")
        value = rows[name][i - 1]
        if value is None:
            raise IndexError(f"index {i} for class {name} used before computed")
        return value

    def c2(name, i):
        return c(square[name], i)

    for n in [4] + list(range(6, order + 1)):
        for name in rows:
            q, rem = divmod(n, 4)
            if rem == 0:
                j = q
                total = c(name, 2 * j + 1)
                total += _halve(c(name, j) ** 2 - c2(name, j), name, n)
                total += sum(c(name, i) * c(name, 2 * j - i) for i in range(1, j))
            elif rem == 1:
                j = q
                total = c(name, 2 * j + 3) - c(name, 2) * c(name, 2 * j)
                total += _halve(c(name, 2 * j) ** 2 + c2(name, 2 * j), name, n)
                total += _halve(c(name, j + 1) ** 2 - c2(name, j + 1), name, n)
                total += sum(
                    c(name, i) * c(name, 2 * j - i + 2) for i in range(1, j + 1)
                )
                total += sum(
                    c2(name, i) * c(name, 4 * j - 4 * i) for i in range(1, j)
                )
                total += sum(
                    (-1) ** i * c(name, i) * c(name, 4 * j - i)
                    for i in range(1, 2 * j)
                )
            elif rem == 2:
                j = q
                total = c(name, 2 * j + 2)
                total += sum(
                    c(name, i) * c(name, 2 * j - i + 1) for i in range(1, j + 1)
                )
            else:
                j = q
                total = c(name, 2 * j + 4) - c(name, 2) * c(name, 2 * j + 1)
                total -= _halve(
                    c(name, 2 * j + 1) ** 2 - c2(name, 2 * j + 1), name, n
                )
                total += sum(
                    c(name, i) * c(name, 2 * j - i + 3) for i in range(1, j + 2)
                )
                total += sum(
                    c2(name, i) * c(name, 4 * j - 4 * i + 2)
                    for i in range(1, j + 1)
                )
                total += sum(
                    (-1) ** i * c(name, i) * c(name, 4 * j - i + 2)
                    for i in range(1, 2 * j + 1)
                )
            rows[name][n - 1] = total
    return CoefficientTable(order, rows)


def multiplicity(dataset, table, k, j):
    """Multiplicity of the k-th irreducible in the weight-(j+1) piece.

    k = 1 (the trivial character) is always available; other indices need
    the dataset's optional character block.  The orthogonality sum must
    land on a nonnegative integer or the dataset is inconsistent.
    """
    if not 1 <= j <= table.order:
        raise IndexError(f"index {j} outside the computed order {table.order}")
    if k == 1:
        chi = {record.name: 1 for record in dataset.classes}
    else:
        if dataset.characters is None or k not in dataset.characters:
            raise KeyError(
                f"character values for irreducible {k} are not in the dataset"
            )
        chi = dataset.characters[k]
    total = 0
    for record in dataset.classes:
        total += record.class_size * chi[record.name] * table.value(record.name, j)
    mult, remainder = divmod(total, dataset.group_order)
    if remainder:
        raise IntegralityError(
            f"multiplicity of irreducible {k} at index {j} is not integral; "
            f"the dataset is inconsistent"
        )
    if mult < 0:
        raise IntegralityError(
            f"multiplicity of irreducible {k} at index {j} is negative"
        )
    return mult


@dataclass
class NontrivialityRow:
    j: int
    dim_primary: int
    trivial_multiplicity: int
    verdict: str  # "non-trivial" when the strict inequality holds

    @property
    def holds(self):
        return self.verdict == "non-trivial"


def nontriviality_report(dataset, max_j):
    """Rows (j, dim of weight-(j+1) primaries, trivial multiplicity, verdict)
    for 1 <= j <= max_j.

    The action on the family of subalgebras over the root (1, j) moves
    some member whenever the primary dimension strictly exceeds the
    trivial multiplicity; equality or less is reported as inconclusive
    (the criterion is sufficient, not necessary).

    A failure of the identity-class row would implicate the recursion
    formulas; the identity row is validated elsewhere against the modular
    invariant, so a discrepancy here means inconsistent class data.
    """
    if max_j < 1:
        raise ValueError("max_j must be at least 1")
    table = replicate_extend(dataset, max(max_j, 5))
    dims = primary_dim_series(max_j + 1)
    out = []
    for j in range(1, max_j + 1):
        dim = int(dims.coeff(j))
        mult = multiplicity(dataset, table, 1, j)
        verdict = "non-trivial" if dim > mult else "inconclusive"
        out.append(NontrivialityRow(j, dim, mult, verdict))
    return out

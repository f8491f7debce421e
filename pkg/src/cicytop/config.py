"""Configuration matrices for complete intersections in products of projective spaces.

A threefold is described by ambient dimensions ``n_1..n_m`` and an m x k
matrix of non-negative integers whose entry ``(i, j)`` is the degree of the
j-th defining polynomial in the i-th projective factor.  Two arithmetic
conditions single out the Calabi-Yau threefolds:

* ``sum(n_i) == 3 + k``               (the intersection has dimension three)
* ``sum_j q[i][j] == n_i + 1``        (vanishing first Chern class, per row)

Rows are projective factors and columns are polynomials, everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Catalogue-wide bounds; no known threefold configuration exceeds them.
MAX_FACTORS = 15
MAX_POLYNOMIALS = 18


class InvalidConfigurationError(ValueError):
    """Raised when an operation requires a configuration that fails validation."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(report.violations))


@dataclass(frozen=True)
class ConfigurationMatrix:
    """An m x k multi-degree matrix plus the ambient projective dimensions.

    Instances are immutable values; ``ambient_dims`` and ``degrees`` are
    normalized to (nested) tuples so configurations are hashable and safe
    to share across workers.
    """

    id: str
    ambient_dims: tuple[int, ...]
    degrees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "id", str(self.id))
        object.__setattr__(self, "ambient_dims", tuple(int(n) for n in self.ambient_dims))
        object.__setattr__(
            self, "degrees", tuple(tuple(int(q) for q in row) for row in self.degrees)
        )

    @property
    def m(self) -> int:
        """Number of projective factors (rows)."""
        return len(self.ambient_dims)

    @property
    def k(self) -> int:
        """Number of defining polynomials (columns)."""
        return len(self.degrees[0]) if self.degrees else 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.degrees[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.degrees)


@dataclass(frozen=True)
class ReducedConfiguration(ConfigurationMatrix):
    """A configuration with all-zero rows and columns stripped.

    ``removed_rows`` / ``removed_cols`` record the 0-based indices removed
    from the original matrix, so reductions stay auditable.
    """

    removed_rows: tuple[int, ...] = field(default=())
    removed_cols: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`: empty ``violations`` means the matrix is good."""

    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _structural_violations(config: ConfigurationMatrix) -> list[str]:
    """Shape-level problems that make the matrix unusable for any arithmetic."""
    problems = []
    if config.m < 1:
        problems.append("matrix has no rows")
    if not config.degrees or any(len(row) == 0 for row in config.degrees):
        problems.append("matrix has no columns")
    if len(config.degrees) != config.m:
        problems.append(
            f"{len(config.degrees)} degree rows but {config.m} ambient dimensions"
        )
    widths = {len(row) for row in config.degrees}
    if len(widths) > 1:
        problems.append(f"ragged rows: widths {sorted(widths)}")
    for i, n in enumerate(config.ambient_dims):
        if n < 1:
            problems.append(f"ambient dimension {i + 1} is {n}, expected >= 1")
    for i, row in enumerate(config.degrees):
        for j, q in enumerate(row):
            if q < 0:
                problems.append(f"entry ({i + 1},{j + 1}) is negative: {q}")
    return problems


def validate(config: ConfigurationMatrix) -> ValidationReport:
    """Check every defining condition and report all violations by name.

    Violations are reported, never raised, so batch pipelines can log and
    skip malformed records.  Conditions checked:

    * structural: rectangular, matching declared sizes, entries >= 0,
      ambient dimensions >= 1;
    * ``sum(n_i) == 3 + k``;
    * each row sums to ``n_i + 1``;
    * no all-zero column (a zero column is a constant polynomial and the
      intersection would not be a threefold);
    * catalogue bounds ``k <= 18``, ``m <= 15``.
    """
    problems = _structural_violations(config)
    if problems:
        return ValidationReport(tuple(problems))

    m, k = config.m, config.k
    total = sum(config.ambient_dims)
    if total != 3 + k:
        problems.append(f"ambient dimensions sum to {total}, expected 3 + {k} = {3 + k}")
    for i, (n, row) in enumerate(zip(config.ambient_dims, config.degrees)):
        s = sum(row)
        if s != n + 1:
            problems.append(f"row {i + 1} sums to {s}, expected {n + 1}")
    for j in range(k):
        if all(row[j] == 0 for row in config.degrees):
            problems.append(f"column {j + 1} is all zero")
    if k > MAX_POLYNOMIALS:
        problems.append(f"k = {k} exceeds catalogue bound {MAX_POLYNOMIALS}")
    if m > MAX_FACTORS:
        problems.append(f"m = {m} exceeds catalogue bound {MAX_FACTORS}")
    return ValidationReport(tuple(problems))


def reduce_configuration(config: ConfigurationMatrix) -> ReducedConfiguration:
    """Strip all-zero rows and columns, then validate what remains.

    Raw catalogue entries occasionally carry padding rows or columns of
    zeros; they contribute nothing to the intersection ring, so they are
    removed (with provenance) before the Calabi-Yau conditions are
    enforced.  For a configuration that already validates this is the
    identity up to type, and the operation is idempotent.

    Raises ``InvalidConfigurationError`` if the stripped matrix still
    fails validation.
    """
    if isinstance(config, ReducedConfiguration):
        return config
    problems = _structural_violations(config)
    if problems:
        raise InvalidConfigurationError(ValidationReport(tuple(problems)))

    keep_rows = [i for i, row in enumerate(config.degrees) if any(row)]
    removed_rows = tuple(i for i in range(config.m) if i not in keep_rows)
    keep_cols = [
        j
        for j in range(config.k)
        if any(config.degrees[i][j] != 0 for i in keep_rows)
    ]
    removed_cols = tuple(j for j in range(config.k) if j not in keep_cols)

    reduced = ReducedConfiguration(
        id=config.id,
        ambient_dims=tuple(config.ambient_dims[i] for i in keep_rows),
        degrees=tuple(
            tuple(config.degrees[i][j] for j in keep_cols) for i in keep_rows
        ),
        removed_rows=removed_rows,
        removed_cols=removed_cols,
    )
    report = validate(reduced)
    if not report.ok:
        raise InvalidConfigurationError(report)
    return reduced

"""The integer matrix Omega and the three bilinear forms it defines."""
from dataclasses import dataclass
from math import gcd


class InvalidOmega(ValueError):
    """Raised when a matrix violates one or more of the validity conditions."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid omega: " + "; ".join(self.violations))


@dataclass(frozen=True)
class CartanData:
    """An n x n integer matrix Omega (stored as a tuple of tuples).

    Forms on vertices i, j:
        angle(i, j)   = Omega[i][j]
        bracket(i, j) = 2 delta_ij Omega[i][i] - Omega[i][j]
        dot(i, j)     = Omega[i][j] + Omega[j][i]

    Construct through :func:`validate` to enforce the axioms; direct
    construction skips them (useful for computing forms on arbitrary
    matrices).
    """
    omega: tuple

    def __post_init__(self):
        om = tuple(tuple(int(x) for x in row) for row in self.omega)
        n = len(om)
        if n == 0 or any(len(row) != n for row in om):
            raise ValueError("omega must be a nonempty square matrix")
        object.__setattr__(self, "omega", om)

    @property
    def n(self):
        return len(self.omega)

    def _check(self, *idx):
        for i in idx:
            if not (0 <= i < self.n):
                raise IndexError(f"vertex {i} out of range 0..{self.n - 1}")

    def angle(self, i, j):
        self._check(i, j)
        return self.omega[i][j]

    def bracket(self, i, j):
        self._check(i, j)
        return (2 * self.omega[i][i] if i == j else 0) - self.omega[i][j]

    def dot(self, i, j):
        self._check(i, j)
        return self.omega[i][j] + self.omega[j][i]

    def d(self, i):
        """Scale d_i = Omega_ii, so that v_i = v^d_i and t_i = t^d_i."""
        self._check(i)
        return self.omega[i][i]

    # biadditive versions on degree vectors

    def angle_deg(self, x, y):
        om = self.omega
        return sum(x[a] * y[b] * om[a][b]
                   for a in range(self.n) if x[a] for b in range(self.n) if y[b])

    def bracket_deg(self, x, y):
        om = self.omega
        total = 0
        for a in range(self.n):
            if not x[a]:
                continue
            if y[a]:
                total += 2 * x[a] * y[a] * om[a][a]
            for b in range(self.n):
                if y[b]:
                    total -= x[a] * y[b] * om[a][b]
        return total

    def dot_deg(self, x, y):
        return self.angle_deg(x, y) + self.angle_deg(y, x)

    def antisym_deg(self, x, y):
        """angle(y, x) - angle(x, y), the t-exponent in the tensor twist."""
        return self.angle_deg(y, x) - self.angle_deg(x, y)

    def unit(self, i):
        self._check(i)
        return tuple(1 if k == i else 0 for k in range(self.n))

    def to_json(self):
        return [list(row) for row in self.omega]


def violations(omega):
    """List every violated validity condition (empty when valid)."""
    out = []
    n = len(omega)
    if n == 0 or any(len(row) != n for row in omega):
        return ["matrix is not square"]
    for i in range(n):
        if omega[i][i] <= 0:
            out.append(f"(a) diagonal entry omega[{i}][{i}] = {omega[i][i]} is not positive")
    for i in range(n):
        for j in range(n):
            if i != j and omega[i][j] > 0:
                out.append(f"(a) off-diagonal entry omega[{i}][{j}] = {omega[i][j]} is positive")
    for i in range(n):
        if omega[i][i] <= 0:
            continue
        for j in range(n):
            if i == j:
                continue
            s = omega[i][j] + omega[j][i]
            if s % omega[i][i] != 0 or s > 0:
                out.append(f"(b) (omega[{i}][{j}] + omega[{j}][{i}]) / omega[{i}][{i}] "
                           f"= {s}/{omega[i][i]} is not a nonpositive integer")
    g = 0
    for i in range(n):
        g = gcd(g, omega[i][i])
    if g != 1:
        out.append(f"(c) gcd of the diagonal is {g}, not 1")
    return out


def validate(omega):
    """Return CartanData for a valid matrix, else raise InvalidOmega."""
    if isinstance(omega, CartanData):
        omega = omega.omega
    try:
        rows = [[int(x) for x in row] for row in omega]
    except (TypeError, ValueError):
        raise InvalidOmega(["matrix entries must be integers"]) from None
    bad = violations(rows)
    if bad:
        raise InvalidOmega(bad)
    return CartanData(tuple(tuple(r) for r in rows))


def form_angle(c, i, j):
    if isinstance(i, int):
        return c.angle(i, j)
    return c.angle_deg(i, j)


def form_bracket(c, i, j):
    if isinstance(i, int):
        return c.bracket(i, j)
    return c.bracket_deg(i, j)


def form_dot(c, i, j):
    if isinstance(i, int):
        return c.dot(i, j)
    return c.dot_deg(i, j)


def subst_data(c, i):
    return c.d(i)


A2 = ((1, -1), (0, 1))
A2_OPPOSITE = ((1, 0), (-1, 1))

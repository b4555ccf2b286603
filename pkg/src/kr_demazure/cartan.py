"""Exact Cartan data for the nonexceptional affine types.

Everything is integer / Fraction arithmetic; no floats.  A ``CartanData``
instance carries the Cartan matrix, marks and comarks, special nodes, the
lattice denominator N, and a cached rational Gram matrix for the invariant
bilinear form in the basis {Lambda_0..Lambda_n, delta}.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

# canonical type labels -> minimal rank (n in the usual symbol)
TYPE_LABELS = {
    "A": 1,        # A_n^(1)
    "B": 3,        # B_n^(1)
    "C": 2,        # C_n^(1)
    "D": 4,        # D_n^(1)
    "A2odd": 3,    # A_{2n-1}^(2)
    "A2even": 1,   # A_{2n}^(2)
    "D2": 2,       # D_{n+1}^(2)
}

_PRETTY = {
    "A": "A_{n}^(1)", "B": "B_{n}^(1)", "C": "C_{n}^(1)", "D": "D_{n}^(1)",
    "A2odd": "A_{2n-1}^(2)", "A2even": "A_{2n}^(2)", "D2": "D_{n+1}^(2)",
}


def _norm(x):
    """Collapse a Fraction with denominator 1 to int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _mat_inverse(rows):
    """Exact inverse of a square matrix given as tuple of row tuples."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(_norm(row[n:][j]) for j in range(n)) for row in aug)


def _kernel_vector(rows):
    """Primitive positive integer vector spanning the 1-dim kernel of `rows`."""
    n = len(rows[0])
    m = [[Fraction(x) for x in row] for row in rows]
    # row-reduce
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ValueError("kernel is not one-dimensional")
    c0 = free[0]
    vec = [Fraction(0)] * n
    vec[c0] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -m[i][c0]
    mult = lcm(*(f.denominator for f in vec))
    ints = [int(f * mult) for f in vec]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise ValueError("kernel vector is not positive")
    return tuple(ints)


def _cartan_matrix(label, n):
    """Cartan matrix (a_ij) over the node set {0..n} in the Kac labeling."""
    a = [[2 * int(i == j) for j in range(n + 1)] for i in range(n + 1)]

    def edge(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if label == "A":
        if n == 1:
            edge(0, 1, -2, -2)
        else:
            for i in range(n):
                edge(i, i + 1)
            edge(n, 0)
    elif label == "B":
        edge(0, 2)
        edge(1, 2)
        for i in range(2, n - 1):
            edge(i, i + 1)
        edge(n - 1, n, -1, -2)
    elif label == "C":
        edge(0, 1, -1, -2)
        for i in range(1, n - 1):
            edge(i, i + 1)
        edge(n - 1, n, -2, -1)
    elif label == "D":
        edge(0, 2)
        edge(1, 2)
        for i in range(2, n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1)
        edge(n - 2, n)
    elif label == "A2odd":
        edge(0, 2)
        edge(1, 2)
        for i in range(2, n - 1):
            edge(i, i + 1)
        edge(n - 1, n, -2, -1)
    elif label == "A2even":
        if n == 1:
            edge(0, 1, -4, -1)
        else:
            edge(0, 1, -2, -1)
            for i in range(1, n - 1):
                edge(i, i + 1)
            edge(n - 1, n, -2, -1)
    elif label == "D2":
        edge(0, 1, -2, -1)
        for i in range(1, n - 1):
            edge(i, i + 1)
        edge(n - 1, n, -1, -2)
    else:
        raise ValueError(f"unknown type label {label!r}")
    return tuple(tuple(row) for row in a)


def _special_nodes(label, n):
    if label == "A":
        return tuple(range(n + 1))
    if label in ("B", "A2odd"):
        return (0, 1)
    if label in ("C", "D2"):
        return (0, n)
    if label == "D":
        return (0, 1, n - 1, n)
    if label == "A2even":
        return (0,)
    raise ValueError(label)


class CartanData:
    """Affine Cartan datum with exact lattice pairings and invariant form."""

    def __init__(self, label, rank):
        if label not in TYPE_LABELS:
            raise ValueError(f"unknown type label {label!r}; expected one of {sorted(TYPE_LABELS)}")
        if rank < TYPE_LABELS[label]:
            raise ValueError(f"rank {rank} out of range for type {label} (min {TYPE_LABELS[label]})")
        self.label = label
        self.rank = rank
        self.n = rank
        self.nodes = tuple(range(rank + 1))
        self.classical_nodes = tuple(range(1, rank + 1))
        self.cartan_matrix = _cartan_matrix(label, rank)
        self.marks = _kernel_vector(self.cartan_matrix)                    # a_i
        comatrix = tuple(tuple(self.cartan_matrix[j][i] for j in self.nodes) for i in self.nodes)
        self.comarks = _kernel_vector(comatrix)                            # a_i^vee
        self.special_nodes = _special_nodes(label, rank)
        self.c = {i: max(1, Fraction(self.marks[i], self.comarks[i]))
                  for i in self.classical_nodes}
        self.c = {i: _norm(v) for i, v in self.c.items()}
        self._check_kernels()
        self._build_form()
        self._build_finite_inverse()
        self.N = self._compute_N()

    def _check_kernels(self):
        A, a, av = self.cartan_matrix, self.marks, self.comarks
        for i in self.nodes:
            assert sum(A[i][j] * a[j] for j in self.nodes) == 0
        for j in self.nodes:
            assert sum(av[i] * A[i][j] for i in self.nodes) == 0

    def _build_form(self):
        """Gram matrix of ( , ) in the {Lambda_0..Lambda_n, delta} basis.

        Defined on the basis {alpha_0..alpha_n, Lambda_0} by
        (alpha_i, alpha_j) = (a_i^vee / a_i) a_ij, (alpha_i, Lambda_0) =
        delta_{0i}/a_0 and (Lambda_0, Lambda_0) = 0, then transported.
        """
        n = self.n
        dim = n + 2
        # columns: alpha_0..alpha_n, Lambda_0, written in Lambda/delta coords
        T = [[Fraction(0)] * dim for _ in range(dim)]
        for j in self.nodes:                       # alpha_j column
            for i in self.nodes:
                T[i][j] = Fraction(self.cartan_matrix[i][j])
            T[n + 1][j] = Fraction(int(j == 0), self.marks[0])   # delta coefficient
        T[0][n + 1] = Fraction(1)                  # Lambda_0 column
        Tinv = _mat_inverse(tuple(tuple(row) for row in T))
        G = [[Fraction(0)] * dim for _ in range(dim)]
        for i in self.nodes:
            for j in self.nodes:
                G[i][j] = Fraction(self.comarks[i], self.marks[i]) * self.cartan_matrix[i][j]
            G[i][n + 1] = G[n + 1][i] = Fraction(int(i == 0), self.marks[0])
        # gram in Lambda/delta coords: Tinv^T @ G @ Tinv
        TG = [[sum(Tinv[k][i] * G[k][l] for k in range(dim)) for l in range(dim)]
              for i in range(dim)]
        M = [[_norm(sum(TG[i][k] * Tinv[k][j] for k in range(dim))) for j in range(dim)]
             for i in range(dim)]
        self._gram = tuple(tuple(row) for row in M)
        self._basis_to_alpha = Tinv   # Lambda/delta coords -> alpha/Lambda_0 coords

    def _build_finite_inverse(self):
        """Inverse transpose of the finite Cartan submatrix, for varpi^vee."""
        n = self.n
        fin = tuple(tuple(Fraction(self.cartan_matrix[i][j]) for j in self.classical_nodes)
                    for i in self.classical_nodes)
        self._finite_inv = _mat_inverse(fin)   # inverse of (a_ij)_{i,j in I_0}
        # varpi_j^vee = sum_i coeff[i] alpha_i^vee with coeff solving a_ik c_i = delta_jk
        finT = tuple(tuple(Fraction(self.cartan_matrix[j][i]) for j in self.classical_nodes)
                     for i in self.classical_nodes)
        self._finite_invT = _mat_inverse(finT)

    def _compute_N(self):
        """Least N with N*(lam,lam)/2 integral for every lam in the lattice
        spanned by the c_i varpi_i (cross pairings included)."""
        basis = [self.varpi(i) * self.c[i] for i in self.classical_nodes]
        affs = [aff(b) for b in basis]
        dens = [1]
        for i, x in enumerate(affs):
            for j, y in enumerate(affs):
                v = self.invariant_form(x, y)
                if i == j:
                    v = v / 2
                dens.append(Fraction(v).denominator)
        return lcm(*dens)

    # --- basic elements -------------------------------------------------

    def Lambda(self, i):
        """Fundamental weight Lambda_i as an AffineWeight (delta coeff 0)."""
        return AffineWeight(self, tuple(int(j == i) for j in self.nodes), 0)

    def delta(self):
        return AffineWeight(self, (0,) * (self.n + 1), 1)

    def alpha(self, i):
        """Simple root alpha_i in the {Lambda, delta} basis."""
        coeffs = tuple(self.cartan_matrix[j][i] for j in self.nodes)
        dc = Fraction(int(i == 0), self.marks[0])
        return AffineWeight(self, coeffs, dc)

    def alpha_cl(self, i):
        return self.alpha(i).classical()

    def varpi(self, i):
        """Level-0 fundamental weight varpi_i = cl(Lambda_i) - a_i^vee cl(Lambda_0)."""
        if i == 0:
            return ClassicalWeight(self, (0,) * (self.n + 1))
        coeffs = [0] * (self.n + 1)
        coeffs[i] = 1
        coeffs[0] = -self.comarks[i]
        return ClassicalWeight(self, tuple(coeffs))

    def zero_classical(self):
        return ClassicalWeight(self, (0,) * (self.n + 1))

    def invariant_form(self, lam, mu):
        """Exact value of the W-invariant symmetric bilinear form."""
        v = lam.vector()
        w = mu.vector()
        G = self._gram
        n2 = self.n + 2
        return _norm(sum(v[i] * G[i][j] * w[j] for i in range(n2) for j in range(n2)
                         if v[i] != 0 and w[j] != 0))

    def to_alpha_coords(self, lam):
        """Coordinates of an AffineWeight in the {alpha_0..alpha_n, Lambda_0} basis."""
        v = lam.vector()
        Ti = self._basis_to_alpha
        n2 = self.n + 2
        return tuple(_norm(sum(Ti[i][j] * v[j] for j in range(n2))) for i in range(n2))

    def pretty(self):
        return _PRETTY[self.label].replace("{n}", str(self.n)) \
            .replace("{2n-1}", str(2 * self.n - 1)) \
            .replace("{2n}", str(2 * self.n)) \
            .replace("{n+1}", str(self.n + 1))

    def __repr__(self):
        return f"CartanData({self.label!r}, {self.n})"

    def __eq__(self, other):
        return isinstance(other, CartanData) and (self.label, self.n) == (other.label, other.n)

    def __hash__(self):
        return hash((self.label, self.n))


_CACHE = {}


def build_cartan_data(label, rank):
    """Build (and cache) the Cartan datum for the given affine type."""
    key = (label, rank)
    if key not in _CACHE:
        _CACHE[key] = CartanData(label, rank)
    return _CACHE[key]


class ClassicalWeight:
    """Element of P_cl, stored as coefficients of the cl(Lambda_i)."""

    __slots__ = ("cartan", "coeffs")

    def __init__(self, cartan, coeffs):
        self.cartan = cartan
        self.coeffs = tuple(_norm(Fraction(c)) for c in coeffs)

    def level(self):
        return _norm(sum(a * c for a, c in zip(self.cartan.comarks, self.coeffs)))

    def coroot_pairing(self, i):
        return self.coeffs[i]

    def omega_check_pairing(self, j):
        """Pairing with varpi_j^vee (j in I_0; varpi_0^vee = 0)."""
        if j == 0:
            return 0
        inv = self.cartan._finite_invT
        cls = self.cartan.classical_nodes
        col = inv[cls.index(j)]
        return _norm(sum(col[k] * self.coeffs[i] for k, i in enumerate(cls)))

    def varpi_coords(self):
        """Coordinates in the varpi basis; requires level 0."""
        if self.level() != 0:
            raise ValueError("varpi coordinates need a level-0 weight")
        return tuple(self.coeffs[i] for i in self.cartan.classical_nodes)

    @staticmethod
    def from_varpi(cartan, coords):
        coeffs = [Fraction(0)] * (cartan.n + 1)
        for k, i in enumerate(cartan.classical_nodes):
            coeffs[i] = Fraction(coords[k])
        lvl = sum(a * c for a, c in zip(cartan.comarks, coeffs))
        coeffs[0] = Fraction(-lvl, cartan.comarks[0])
        return ClassicalWeight(cartan, coeffs)

    def is_dominant(self):
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other):
        return ClassicalWeight(self.cartan, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return ClassicalWeight(self.cartan, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return ClassicalWeight(self.cartan, tuple(-a for a in self.coeffs))

    def __mul__(self, k):
        return ClassicalWeight(self.cartan, tuple(a * k for a in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassicalWeight) and self.coeffs == other.coeffs \
            and self.cartan == other.cartan

    def __hash__(self):
        return hash(("cl", self.coeffs))

    def __repr__(self):
        return f"cl{list(self.coeffs)}"


class AffineWeight:
    """Element of P in the basis {Lambda_0..Lambda_n, delta}."""

    __slots__ = ("cartan", "coeffs", "delta_coeff")

    def __init__(self, cartan, coeffs, delta_coeff=0):
        self.cartan = cartan
        self.coeffs = tuple(_norm(Fraction(c)) for c in coeffs)
        self.delta_coeff = _norm(Fraction(delta_coeff))

    def vector(self):
        return self.coeffs + (self.delta_coeff,)

    def classical(self):
        return ClassicalWeight(self.cartan, self.coeffs)

    def level(self):
        """Pairing with the canonical central element K."""
        return _norm(sum(a * c for a, c in zip(self.cartan.comarks, self.coeffs)))

    def coroot_pairing(self, i):
        return self.coeffs[i]

    def d_pairing(self):
        """Pairing with the degree operator d (<alpha_i, d> = delta_{0i})."""
        return _norm(self.delta_coeff * self.cartan.marks[0])

    def omega_check_pairing(self, j):
        return self.classical().omega_check_pairing(j)

    def is_dominant(self):
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other):
        return AffineWeight(self.cartan,
                            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                            self.delta_coeff + other.delta_coeff)

    def __sub__(self, other):
        return AffineWeight(self.cartan,
                            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
                            self.delta_coeff - other.delta_coeff)

    def __neg__(self):
        return AffineWeight(self.cartan, tuple(-a for a in self.coeffs), -self.delta_coeff)

    def __mul__(self, k):
        return AffineWeight(self.cartan, tuple(a * k for a in self.coeffs), self.delta_coeff * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AffineWeight) and self.coeffs == other.coeffs \
            and self.delta_coeff == other.delta_coeff and self.cartan == other.cartan

    def __hash__(self):
        return hash(("aff", self.coeffs, self.delta_coeff))

    def sort_key(self):
        return (self.coeffs, self.delta_coeff)

    def serialize(self):
        """Stable text form `Λ[m_0,...,m_n] + (p/q)δ`."""
        lam = ",".join(str(c) for c in self.coeffs)
        return f"Λ[{lam}] + ({self.delta_coeff})δ"

    @staticmethod
    def parse(cartan, text):
        text = text.strip()
        if not text.startswith("Λ["):
            raise ValueError(f"bad weight literal {text!r}")
        close = text.index("]")
        coeffs = [Fraction(t) for t in text[2:close].split(",")]
        rest = text[close + 1:].strip()
        dc = Fraction(0)
        if rest:
            if not (rest.startswith("+") and rest.endswith("δ")):
                raise ValueError(f"bad delta part in {text!r}")
            inner = rest[1:-1].strip()
            if not (inner.startswith("(") and inner.endswith(")")):
                raise ValueError(f"bad delta part in {text!r}")
            dc = Fraction(inner[1:-1])
        if len(coeffs) != cartan.n + 1:
            raise ValueError("wrong number of Λ coefficients")
        return AffineWeight(cartan, coeffs, dc)

    def __repr__(self):
        return self.serialize()


def classical_projection(lam):
    """cl: P -> P_cl (drop the delta coefficient)."""
    return lam.classical()


def aff(mu):
    """The section of cl with <aff(mu), d> = 0."""
    return AffineWeight(mu.cartan, mu.coeffs, 0)


def pair(lam, functional, index=None):
    """Pairing of an affine weight against {coroot i, d, K, varpi_i^vee}."""
    if functional == "coroot":
        return lam.coroot_pairing(index)
    if functional == "d":
        return lam.d_pairing()
    if functional == "K":
        return lam.level()
    if functional == "omega_check":
        return lam.omega_check_pairing(index)
    raise ValueError(f"unknown functional {functional!r}")

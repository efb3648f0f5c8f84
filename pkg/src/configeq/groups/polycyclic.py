from __future__ import annotations

from typing import Mapping, Sequence

from ..words import RepresentativePair
from .base import Group, InvalidElement, PresentationError

Vector = tuple[int, ...]

# bound on the order of a conjugation automorphism when inverse relations
# cannot be solved triangularly
MAX_AUTOMORPHISM_ORDER = 64


class PolycyclicGroup(Group):
    """Group given by a polycyclic presentation on a_1, ..., a_n.

    Elements are exponent vectors of collected words a_1^x_1 ... a_n^x_n
    with ``0 <= x_i < m_i`` at finite-index positions.  Internally positions
    are 0-based; documents and words use 1-based indices.

    Products are computed by collection from the left: the right factor is
    consumed one generator letter at a time and each letter a_j^e is moved
    into place past the collected tail T by conjugation,
    ``H a_j^x T a_j^e = H a_j^(x+e) (a_j^-e T a_j^e)``, where the conjugated
    tail lies in <a_(j+1), ..., a_n> and is collected recursively.  An
    exponent leaving [0, m_j) is brought back with the power relation.
    The strategy is fixed so normal forms are reproducible.
    """

    kind = "polycyclic"

    def __init__(self, n: int, relative_orders: Mapping[int, int] | None = None,
                 power_relations: Mapping[int, Sequence[int]] | None = None,
                 conjugations: Mapping[tuple[int, int], Sequence[int]] | None = None,
                 inverse_conjugations: Mapping[tuple[int, int], Sequence[int]] | None = None,
                 generators: Sequence[Sequence[int]] | None = None):
        if n < 1:
            raise PresentationError("need at least one polycyclic generator")
        self.pc_length = n
        self.identity = (0,) * n
        self.rel_orders: list[int | None] = [None] * n
        for i, m in (relative_orders or {}).items():
            if not 0 <= i < n:
                raise PresentationError(f"relative order index {i + 1} out of range")
            if int(m) < 2:
                raise PresentationError(f"relative order m_{i + 1} must exceed 1")
            self.rel_orders[i] = int(m)
        self.finite_index = frozenset(i for i in range(n) if self.rel_orders[i] is not None)

        self._power: list[Vector | None] = [None] * n
        for i in self.finite_index:
            w = tuple((power_relations or {}).get(i, self.identity))
            self._check_rhs(w, i, f"power relation of a_{i + 1}")
            self._power[i] = w
        for i in (power_relations or {}):
            if i not in self.finite_index:
                raise PresentationError(f"power relation given for infinite generator a_{i + 1}")

        self._conj: list[dict[int, Vector]] = [dict() for _ in range(n)]
        for (i, j), w in (conjugations or {}).items():
            if not 0 <= i < j < n:
                raise PresentationError(f"conjugation relation ({i + 1}, {j + 1}) needs i < j")
            w = tuple(w)
            self._check_rhs(w, i, f"a_{i + 1}^-1 a_{j + 1} a_{i + 1}")
            self._conj[i][j] = w

        given_inv = {}
        for (i, j), w in (inverse_conjugations or {}).items():
            if not 0 <= i < j < n:
                raise PresentationError(f"conjugation relation ({i + 1}, {j + 1}) needs i < j")
            w = tuple(w)
            self._check_rhs(w, i, f"a_{i + 1} a_{j + 1} a_{i + 1}^-1")
            given_inv[(i, j)] = w

        self._conj_inv: list[dict[int, Vector]] = [dict() for _ in range(n)]
        self._power_inv: list[Vector | None] = [None] * n
        # a_i-conjugation acts on <a_(i+1)..a_n>, whose arithmetic only needs
        # the tables of later generators, so fill from the bottom up
        for i in reversed(range(n)):
            self._derive_inverse(i, given_inv)
            if i in self.finite_index:
                self._power_inv[i] = self.inv(self._power[i])

        if generators is None:
            gens = tuple(self.unit(i) for i in range(n))
        else:
            gens = tuple(tuple(int(v) for v in g) for g in generators)
            for g in gens:
                self.validate(g)
        if not gens:
            raise PresentationError("generating tuple is empty")
        self.generators = gens

    # -- helpers -----------------------------------------------------------
    def unit(self, i: int, e: int = 1) -> Vector:
        v = [0] * self.pc_length
        v[i] = e
        return tuple(v)

    def _check_rhs(self, w: Vector, i: int, what: str) -> None:
        if len(w) != self.pc_length:
            raise PresentationError(f"{what}: vector has length {len(w)}, expected {self.pc_length}")
        if any(w[k] for k in range(i + 1)):
            raise PresentationError(f"{what}: right-hand side must use only later generators")
        for k in range(i + 1, self.pc_length):
            m = self.rel_orders[k]
            if m is not None and not 0 <= w[k] < m:
                raise PresentationError(f"{what}: exponent of a_{k + 1} outside [0, {m})")

    def _image(self, i: int, k: int, e: int) -> Vector:
        """a_i^-e a_k a_i^e for k > i."""
        table = self._conj[i] if e > 0 else self._conj_inv[i]
        return table.get(k) or self.unit(k)

    def _derive_inverse(self, i: int, given: dict) -> None:
        n = self.pc_length
        for j in range(i + 1, n):
            if (i, j) in given:
                self._conj_inv[i][j] = given[(i, j)]
        missing = [j for j in range(i + 1, n) if j not in self._conj_inv[i]]
        if not missing:
            self._verify_inverse(i)
            return
        try:
            solved = self._solve_triangular(i)
        except PresentationError:
            solved = self._solve_by_order(i)
        for j in missing:
            self._conj_inv[i][j] = solved[j]
        self._verify_inverse(i)

    def _conjugate_by(self, x: Vector, i: int, e: int) -> Vector:
        """a_i^-e x a_i^e for x in <a_(i+1)..a_n>."""
        result = self.identity
        for k in range(i + 1, self.pc_length):
            if x[k]:
                result = self.mul(result, self.power(self._image(i, k, e), x[k]))
        return result

    def _solve_triangular(self, i: int) -> dict[int, Vector]:
        # find y_k with a_i^-1 y_k a_i = a_k, from the last generator upwards
        n = self.pc_length
        ys: dict[int, Vector] = {}
        for k in reversed(range(i + 1, n)):
            c = self._image(i, k, 1)
            if any(c[l] for l in range(i + 1, k)):
                raise PresentationError("not triangular")
            lead = c[k]
            m = self.rel_orders[k]
            if m is None:
                if lead not in (1, -1):
                    raise PresentationError("not triangular")
                t = lead
            else:
                try:
                    t = pow(lead, -1, m)
                except ValueError:
                    raise PresentationError("not triangular") from None
            ct = self.power(c, t)
            if ct[k] != 1 or any(ct[l] for l in range(i + 1, k)):
                raise PresentationError("not triangular")
            u = ct[:k] + (0,) + ct[k + 1:]
            pre_u = self.identity
            for l in range(k + 1, n):
                if u[l]:
                    pre_u = self.mul(pre_u, self.power(ys[l], u[l]))
            ys[k] = self.mul(self.power(self.unit(k), t), self.inv(pre_u))
        return ys

    def _solve_by_order(self, i: int) -> dict[int, Vector]:
        n = self.pc_length
        cur = {k: self.unit(k) for k in range(i + 1, n)}
        prev = dict(cur)
        for _ in range(MAX_AUTOMORPHISM_ORDER):
            prev = cur
            cur = {k: self._conjugate_by(v, i, 1) for k, v in cur.items()}
            if all(cur[k] == self.unit(k) for k in cur):
                # phi^r = id, so phi^-1 = phi^(r-1) = prev
                return prev
        raise PresentationError(
            f"could not derive a_{i + 1} a_j a_{i + 1}^-1 relations; supply them explicitly")

    def _verify_inverse(self, i: int) -> None:
        for k in range(i + 1, self.pc_length):
            y = self._conj_inv[i][k]
            if self._conjugate_by(y, i, 1) != self.unit(k):
                raise PresentationError(
                    f"inverse conjugation relation for ({i + 1}, {k + 1}) is inconsistent")

    # -- arithmetic --------------------------------------------------------
    def _mul_letter(self, x: Vector, j: int, e: int) -> Vector:
        tail = x[j + 1:]
        if any(tail):
            t = self._conjugate_by((0,) * (j + 1) + tail, j, e)
        else:
            t = self.identity
        a = x[j] + e
        m = self.rel_orders[j]
        if m is not None:
            if a == m:
                a = 0
                t = self.mul(self._power[j], t)
            elif a < 0:
                # a_j^-1 = a_j^(m-1) w^-1 where a_j^m = w
                a = m - 1
                t = self.mul(self._power_inv[j], t)
        return x[:j] + (a,) + t[j + 1:]

    def mul(self, a, b):
        x = a
        for j, bj in enumerate(b):
            if not bj:
                continue
            if not any(x[j + 1:]) and self.rel_orders[j] is None:
                # nothing to collect past
                x = x[:j] + (x[j] + bj,) + x[j + 1:]
                continue
            e = 1 if bj > 0 else -1
            for _ in range(abs(bj)):
                x = self._mul_letter(x, j, e)
        return x

    def inv(self, a):
        x = self.identity
        for j in reversed(range(self.pc_length)):
            if a[j]:
                x = self.mul(x, self.unit(j, -a[j]) if self.rel_orders[j] is None
                             else self._neg_power(j, a[j]))
        return x

    def _neg_power(self, j: int, k: int) -> Vector:
        x = self.identity
        for _ in range(k):
            x = self._mul_letter(x, j, -1)
        return x

    def validate(self, a) -> None:
        if not isinstance(a, tuple) or len(a) != self.pc_length:
            raise InvalidElement(f"{a!r} is not an exponent vector of length {self.pc_length}")
        for k, v in enumerate(a):
            if not isinstance(v, int):
                raise InvalidElement(f"{a!r}: non-integer exponent")
            m = self.rel_orders[k]
            if m is not None and not 0 <= v < m:
                raise InvalidElement(f"{a!r}: exponent of a_{k + 1} outside [0, {m})")

    # -- words ---------------------------------------------------------------
    def collect(self, word: Sequence[tuple[int, int]]) -> Vector:
        """Collected exponent vector of a word given as (1-based generator, +-1) letters."""
        x = self.identity
        for j, e in word:
            if not 1 <= j <= self.pc_length or e not in (1, -1):
                raise IndexError(f"bad letter ({j}, {e})")
            x = self._mul_letter(x, j - 1, e)
        return x

    def collected_pair(self, a) -> RepresentativePair:
        """The representative pair spelling the collected word of ``a`` over a_1..a_n."""
        J, rho = [], []
        for j, v in enumerate(a):
            J.extend([j + 1] * abs(v))
            rho.extend([1 if v > 0 else -1] * abs(v))
        return RepresentativePair(tuple(J), tuple(rho))

    def word_of(self, a) -> RepresentativePair:
        units = tuple(self.unit(i) for i in range(self.pc_length))
        if self.generators == units:
            return self.collected_pair(a)
        # spell each a_i over the custom generating tuple once, then substitute
        if getattr(self, "_unit_words", None) is None:
            from .ball import ball
            found = ball(self, 8)
            missing = [u for u in units if u not in found]
            if missing:
                raise ValueError(f"pc generators {missing} not reached within radius 8")
            self._unit_words = [found[u] for u in units]
        J: tuple[int, ...] = ()
        rho: tuple[int, ...] = ()
        for j, v in enumerate(a):
            w = self._unit_words[j]
            if v < 0:
                w = RepresentativePair(w.J[::-1], tuple(-r for r in reversed(w.rho)))
            J += w.J * abs(v)
            rho += w.rho * abs(v)
        return RepresentativePair(J, rho)

    def parse_element(self, value):
        a = tuple(int(v) for v in value)
        self.validate(a)
        return a

    def format_element(self, a) -> str:
        return "(" + ",".join(str(v) for v in a) + ")"

    def to_document(self) -> dict:
        n = self.pc_length
        fin = sorted(self.finite_index)
        conj = [[i + 1, j + 1, list(w)] for i in range(n) for j, w in sorted(self._conj[i].items())
                if w != self.unit(j)]
        doc = {
            "kind": "polycyclic",
            "n": n,
            "finite_index_set": [i + 1 for i in fin],
            "relative_orders": [self.rel_orders[i] for i in fin],
            "power_relations": [list(self._power[i]) for i in fin],
            "conjugation_relations": conj,
        }
        if self.generators != tuple(self.unit(i) for i in range(n)):
            doc["generators"] = [list(g) for g in self.generators]
        return doc

    def __repr__(self) -> str:
        return f"<PolycyclicGroup n={self.pc_length} I={sorted(i + 1 for i in self.finite_index)}>"

"""Built-in benchmark systems."""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import MonomialOrder, Poly, PolyRing
from .sigspace import ModuleOrder


@dataclass
class ProblemSpec:
    ring: PolyRing
    module_order: ModuleOrder
    generators: list[Poly]

    @property
    def var_names(self) -> tuple[str, ...]:
        return self.ring.names

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order


def _spec(names, gens_of, order: str = "grevlex") -> ProblemSpec:
    ring = PolyRing(names, MonomialOrder(order))
    return ProblemSpec(ring, ModuleOrder(ring), gens_of(ring))


def gen_cyclic(n: int, order: str = "grevlex") -> ProblemSpec:
    """Cyclic-n in x1..xn."""
    if n < 2:
        raise ValueError("cyclic needs n >= 2")

    def gens(ring):
        x = ring.gens()
        out = []
        for j in range(1, n):
            p = ring.zero()
            for i in range(n):
                t = ring.const(1)
                for k in range(j):
                    t = t * x[(i + k) % n]
                p = p + t
            out.append(p)
        prod = ring.const(1)
        for v in x:
            prod = prod * v
        out.append(prod - 1)
        return out

    return _spec([f"x{i}" for i in range(1, n + 1)], gens, order)


def gen_katsura(n: int, order: str = "grevlex") -> ProblemSpec:
    """Katsura-n in the n+1 variables u0..un."""
    if n < 1:
        raise ValueError("katsura needs n >= 1")

    def gens(ring):
        u = ring.gens()

        def var(i):
            i = abs(i)
            return u[i] if i <= n else ring.zero()

        first = u[0] + sum((2 * u[i] for i in range(1, n + 1)), ring.zero()) - 1
        out = [first]
        for m in range(n):
            p = ring.zero()
            for i in range(-n, n + 1):
                p = p + var(i) * var(m - i)
            out.append(p - u[m])
        return out

    return _spec([f"u{i}" for i in range(n + 1)], gens, order)


def parse_system(text: str) -> ProblemSpec:
    """``cyclic:N`` or ``katsura:N``."""
    name, sep, num = text.partition(":")
    if not sep or not num.strip().isdigit():
        raise ValueError(f"bad system {text!r}; expected cyclic:N or katsura:N")
    n = int(num)
    if name == "cyclic":
        return gen_cyclic(n)
    if name == "katsura":
        return gen_katsura(n)
    raise ValueError(f"unknown system {name!r}")

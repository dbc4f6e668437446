"""Execute parsed sessions and render the results."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..cohomology import cohomology_table, serre_duality_check, regularity
from ..dims import DimPair
from ..errors import LimitError, ParityError, PreconditionError, SuperGeomError
from ..expansion import BModulePresentation, expand_module
from ..groebner import betti_table, free_resolution
from ..hilbert import (
    euler_characteristic,
    flag_fibre_dim,
    hilbert_polynomial_pair,
    super_hilbert_polynomial,
    supergrass_dim,
)
from ..koszul import koszul_complex_in, regular_sequence_check
from ..picard import (
    UV,
    GrassmannAlgebra,
    SplitSurfaceData,
    even_unit_factorize,
    nested_pair_count,
    nested_zero_cycle_check,
    pic_parity_structure,
    picard_odd_dimension,
)
from ..superalgebra import EVEN, SuperMatrix, SuperPoly, SuperRing, berezinian
from .parser import Command, Expr, Neg, Num, Pow, Session, Var, variables


def evaluate(e: Expr, ring: SuperRing) -> SuperPoly:
    if isinstance(e, Num):
        return SuperPoly.const(ring, e.value)
    if isinstance(e, Var):
        return SuperPoly.var(ring, e.name)
    if isinstance(e, Neg):
        return -evaluate(e.arg, ring)
    if isinstance(e, Pow):
        return evaluate(e.base, ring) ** e.exponent
    a, b = evaluate(e.left, ring), evaluate(e.right, ring)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    return a * b


def _max_index(exprs, prefix: str) -> int:
    top = 0
    for e in exprs:
        for v in variables(e):
            if v.name.startswith(prefix) and v.name[len(prefix):].isdigit():
                top = max(top, int(v.name[len(prefix):]))
    return top


@dataclass
class Outcome:
    records: list = field(default_factory=list)
    tables: list = field(default_factory=list)
    exit_code: int = 0


class Runner:
    def __init__(self, session: Session, max_degree: int = 12, figures: Path | None = None):
        self.session = session
        self.max_degree = max_degree
        self.figures = Path(figures) if figures is not None else None
        self._figure_count = 0

    # -- objects -----------------------------------------------------------------
    @property
    def ring(self) -> SuperRing:
        r = self.session.ring
        if r is None:
            raise PreconditionError("no ring declared")
        return SuperRing.B(r.m, r.n)

    def ideal_polys(self, name: str, ring: SuperRing) -> list[SuperPoly]:
        decl = self.session.ideals[name]
        allowed = set(ring.even_names) | set(ring.odd_names)
        for e in decl.polys:
            for v in variables(e):
                if v.name not in allowed:
                    raise PreconditionError(
                        f"ideal {name} uses {v.name} (line {v.line}, column {v.col}), which is not a variable of {self._ring_label(ring)}"
                    )
        return [evaluate(e, ring) for e in decl.polys]

    def _ring_label(self, ring: SuperRing) -> str:
        if ring == UV:
            return "k[u,v]"
        r = self.session.ring
        return f"P({r.m},{r.n})" if r else repr(ring)

    def presentation(self, name: str) -> BModulePresentation:
        r = self.session.ring
        if name == "O":
            return BModulePresentation.structure_sheaf(r.m, r.n)
        decl = self.session.modules[name]
        return BModulePresentation.quotient(r.m, r.n, self.ideal_polys(decl.ideal, self.ring))

    def module(self, name: str):
        return expand_module(self.presentation(name))

    def check_twists(self, a: int, b: int):
        if max(abs(a), abs(b)) > self.max_degree:
            raise LimitError(f"twist range {a}..{b} exceeds --max-degree {self.max_degree}")

    # -- commands ----------------------------------------------------------------
    def run(self) -> Outcome:
        out = Outcome()
        for index, cmd in enumerate(self.session.commands):
            try:
                result, table = getattr(self, f"do_{cmd.verb}")(cmd, index)
            except (SuperGeomError, ValueError) as exc:
                code = getattr(exc, "exit_code", 2)
                result = {"error": str(exc), "exit_code": code}
                table = [f"error ({code}): {exc}"]
                if not out.exit_code:
                    out.exit_code = code
            out.records.append({"command": cmd.verb, "object": cmd.obj, "result": result})
            out.tables.append([f"== {cmd.verb} {cmd.obj} =="] + table)
        return out

    def do_cohomology(self, cmd: Command, index: int):
        a, b = cmd.args["twists"]
        self.check_twists(a, b)
        M = self.module(cmd.args["module"])
        T = cohomology_table(M, range(a, b + 1))
        entries = []
        for i in range(M.m + 1):
            for r in range(a, b + 1):
                entries.append({"i": i, "r": r, "dim": T[i, r].to_json()})
        lines = ["i\\r | " + " | ".join(str(r) for r in range(a, b + 1))]
        for i, row in T.rows():
            lines.append(f"{i} | " + " | ".join(str(d) for d in row))
        if self.figures is not None:
            from ..plotting import cohomology_figure

            self._save(cohomology_figure(T, cmd.args["module"]), index, "cohomology", cmd.args["module"])
        return {"entries": entries}, lines

    def do_euler(self, cmd: Command, index: int):
        a, b = cmd.args["twists"]
        self.check_twists(a, b)
        M = self.module(cmd.args["module"])
        poly, _ = hilbert_polynomial_pair(M)
        entries, lines = [], ["r | chi | polynomial"]
        for r in range(a, b + 1):
            chi = euler_characteristic(M, r)
            entries.append({"r": r, "chi": chi.to_json(), "polynomial": poly(r).to_json()})
            lines.append(f"{r} | {chi} | {poly(r)}")
        return {"entries": entries}, lines

    def do_hilbert(self, cmd: Command, index: int):
        P = self.presentation(cmd.args["module"])
        pair, r0 = hilbert_polynomial_pair(expand_module(P))
        filtered = super_hilbert_polynomial(P)
        result = {
            "plus": pair.plus.to_json(),
            "minus": pair.minus.to_json(),
            "stable_from": r0,
            "routes_agree": filtered == pair,
        }
        lines = [f"H+ | {pair.plus}", f"H- | {pair.minus}", f"stable from | {r0}", f"routes agree | {str(filtered == pair).lower()}"]
        return result, lines

    def do_betti(self, cmd: Command, index: int):
        bt = betti_table(free_resolution(self.module(cmd.args["module"])))
        cells: dict = {}
        for i, j, p, v in bt.rows():
            cells.setdefault((i, j), [0, 0])[int(p)] += v
        entries = [{"i": i, "j": j, "betti": DimPair(*v).to_json()} for (i, j), v in sorted(cells.items())]
        lines = ["i | j | betti"] + [f"{i} | {j} | {DimPair(*v)}" for (i, j), v in sorted(cells.items())]
        if self.figures is not None and cells:
            from ..plotting import betti_figure

            self._save(betti_figure(cells, cmd.args["module"]), index, "betti", cmd.args["module"])
        return {"entries": entries}, lines

    def do_regularity(self, cmd: Command, index: int):
        M = self.module(cmd.args["module"])
        reg = regularity(M)
        bound = betti_table(free_resolution(M)).max_shift()
        return {"regularity": reg, "betti_bound": bound}, [f"regularity | {reg}", f"betti bound | {bound}"]

    def do_serre(self, cmd: Command, index: int):
        a = cmd.args
        if a["m"] > 8 or a["n"] > 8 or abs(a["r"]) > self.max_degree:
            raise LimitError("serre arguments exceed the configured caps")
        holds = serre_duality_check(a["m"], a["n"], a["r"])
        return {"holds": holds}, [f"holds | {str(holds).lower()}"]

    def do_koszul(self, cmd: Command, index: int):
        D = cmd.args["window"]
        if D > self.max_degree:
            raise LimitError(f"window {D} exceeds --max-degree {self.max_degree}")
        R = self.ring
        polys = [evaluate(e, R) for e in cmd.args["polys"]]
        evens, odds = [], []
        for f in polys:
            if not f:
                raise PreconditionError("zero element in a Koszul sequence")
            if not f.is_parity_homogeneous():
                raise ParityError(f"{f} mixes parities")
            (evens if f.parity == EVEN else odds).append(f)
        verdict = regular_sequence_check(evens, odds, D, R)
        K = koszul_complex_in(R, evens, odds, D + 1)
        h0 = [K.homology(0, e) for e in range(D + 1)]
        result = {
            "evens": [str(f) for f in evens],
            "odds": [str(f) for f in odds],
            "regular": verdict.ok,
            "verdict": str(verdict),
            "failed_at": list(verdict.failed_at) if verdict.failed_at else None,
            "quotient_dims": [d.to_json() for d in h0],
        }
        lines = [
            f"evens | {', '.join(map(str, evens)) or '-'}",
            f"odds | {', '.join(map(str, odds)) or '-'}",
            f"verdict | {verdict}",
            "H0 by degree | " + " ".join(str(d) for d in h0),
        ]
        return result, lines

    def do_berezinian(self, cmd: Command, index: int):
        rows = cmd.args["rows"]
        flat = [e for row in rows for e in row]
        r = self.session.ring
        n_even = r.m + 1 if r else 0
        k_th, k_eta = _max_index(flat, "th"), _max_index(flat, "eta")
        ring = SuperRing(
            n_even,
            k_th + k_eta,
            tuple(f"x{i}" for i in range(n_even)),
            tuple(f"th{j}" for j in range(1, k_th + 1)) + tuple(f"eta{j}" for j in range(1, k_eta + 1)),
        )
        M = SuperMatrix.from_full([[evaluate(e, ring) for e in row] for row in rows], cmd.args["p"], cmd.args["q"], ring)
        value = berezinian(M)
        return {"value": str(value)}, [f"Ber | {value}"]

    def do_picfactor(self, cmd: Command, index: int):
        e = cmd.args["element"]
        A = GrassmannAlgebra.split(_max_index([e], "th"), _max_index([e], "eta"))
        F = even_unit_factorize(A, evaluate(e, A.ring))
        return {"x0": str(F.x0), "x1": str(F.x1)}, [f"x0 | {F.x0}", f"x1 | {F.x1}"]

    def do_picard(self, cmd: Command, index: int):
        data = SplitSurfaceData(cmd.args["m"], cmd.args["twists"])
        n = picard_odd_dimension(data)
        plus = "Z" if n == 0 else f"Z × A^(0,{n})"
        structure = str(pic_parity_structure(plus))
        return {"odd_dimension": n, "structure": structure}, [f"odd dimension | {n}", f"structure | {structure}"]

    def do_nested(self, cmd: Command, index: int):
        I0 = self.ideal_polys(cmd.args["I0"], UV)
        I1 = self.ideal_polys(cmd.args["I1"], UV)
        res = nested_zero_cycle_check(I0, I1)
        if res.nested:
            p, q = res.lengths
            return {"nested": True, "p": p, "q": q}, ["nested | true", f"lengths | ({p},{q})"]
        return {"nested": False, "witness": str(res.witness)}, ["nested | false", f"witness | {res.witness}"]

    def do_nestedcount(self, cmd: Command, index: int):
        c = nested_pair_count(cmd.args["p"], cmd.args["q"])
        return {"count": c}, [f"count | {c}"]

    def do_dims(self, cmd: Command, index: int):
        args = cmd.args["args"]
        d = supergrass_dim(*args) if cmd.args["kind"] == "grass" else flag_fibre_dim(*args)
        return d.to_json(), [f"dimension | {d}"]

    # -- figures -----------------------------------------------------------------
    def _save(self, fig, index: int, kind: str, name: str):
        import matplotlib.pyplot as plt

        self.figures.mkdir(parents=True, exist_ok=True)
        fig.savefig(self.figures / f"{index:02d}_{kind}_{name}.png", dpi=100)
        plt.close(fig)


def render_json(outcome: Outcome) -> str:
    return json.dumps(outcome.records, indent=2, ensure_ascii=False) + "\n"


def render_table(outcome: Outcome) -> str:
    blocks = ["\n".join(lines) for lines in outcome.tables]
    return "\n\n".join(blocks) + ("\n" if blocks else "")

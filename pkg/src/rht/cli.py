"""Command-line interface; every subcommand prints one JSON report."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import blowup, cohom, massey, models, symp
from .dga import DGA, NotADifferential
from .grade import CapExceeded, MismatchedAlgebra, NotHomogeneous
from .parse import ElementParseError
from .serial import dga_to_json, dumps, model_from_json, qlist, verdict_to_json

FAMILIES = ("heisenberg", "kodaira-thurston", "vn", "cpn", "abelian")


class UsageError(ValueError):
    pass


def _env_cap() -> int | None:
    raw = os.environ.get("RHT_MAX_DEGREE")
    return int(raw) if raw else None


def build_model(args) -> DGA:
    cap = _env_cap()
    if getattr(args, "from_file", None):
        obj = json.loads(Path(args.from_file).read_text())
        return model_from_json(obj, cap)
    fam = args.family
    if fam is None:
        raise UsageError("a model is required: --family or --from-file")
    if fam == "heisenberg":
        return models.chevalley_eilenberg(models.heisenberg())
    if fam == "kodaira-thurston":
        return models.kodaira_thurston()
    if fam == "vn":
        return models.chevalley_eilenberg(models.vn(_need(args.n, "--n")))
    if fam == "abelian":
        return models.chevalley_eilenberg(models.abelian(_need(args.n, "--n")))
    if fam == "cpn":
        return models.cpn(_need(args.m, "--m"), cap)
    raise UsageError(f"unknown family {fam!r}")


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this family")
    return value


def _elements(D: DGA, *texts):
    return [D.algebra.element(t) for t in texts]


def _chern(base: DGA, text: str | None, k: int):
    if not text:
        return None
    parts = [p.strip() for p in text.split(",")]
    parts += ["0"] * (k - len(parts))
    return [base.algebra.element(p) for p in parts]


# -- subcommands -----------------------------------------------------------

def cmd_model(args):
    return dga_to_json(build_model(args))


def cmd_betti(args):
    D = build_model(args)
    out = {"betti": cohom.betti_numbers(D, args.max_degree)}
    if args.ring:
        classes, entries = cohom.ring_table(D, args.max_degree)
        out["classes"] = [{"degree": c.degree, "representative": str(c.representative)} for c in classes]
        out["ring"] = [{"a": e.a, "b": e.b, "degree": e.degree, "product": qlist(e.product)}
                       for e in entries]
    return out


def cmd_cup(args):
    D = build_model(args)
    a, b = _elements(D, args.a, args.b)
    A, B = cohom.class_of(D, a), cohom.class_of(D, b)
    C = cohom.cup(A, B)
    return {"degree": C.degree, "product": str(C.representative), "coords": qlist(C.coords()),
            "zero": C.is_zero()}


def cmd_massey(args):
    D = build_model(args)
    a, b, c = _elements(D, args.a, args.b, args.c)
    return verdict_to_json(massey.massey_of_elements(D, a, b, c))


def cmd_scan(args):
    D = build_model(args)
    found = massey.formality_scan(D, args.max_degree)
    return {
        "max_degree": args.max_degree if args.max_degree is not None else D.top_degree,
        "obstructions": [verdict_to_json(v) for v in found],
        "conclusion": "nonformal" if found else "no obstruction found at this depth",
    }


def _symplectic_cpn(args):
    m = _need(args.m, "--m")
    D = models.cpn(m, _env_cap())
    w = D.algebra.element(args.form or "x")
    W = cohom.class_of(D, w, 2)
    out = {"form": str(w), "closed": True, "nondegenerate": not cohom.class_of(D, w ** m, 2 * m).is_zero()}
    if args.lefschetz or args.harmonic:
        ev = symp.mathieu_evidence_cpn(m)
        if args.lefschetz:
            out.update(_lefschetz_json(symp.hard_lefschetz(D, W, m)))
        if args.harmonic:
            out["harmonic_classes"] = list(ev.harmonic)
            out["harmonic_all"] = ev.harmonic_all
    return out


def _lefschetz_json(rep) -> dict:
    return {"lefschetz": [{"k": s.k, "source_dim": s.source_dim, "target_dim": s.target_dim,
                           "rank": s.rank, "iso": s.iso} for s in rep.steps],
            "lefschetz_passes": rep.passes}


def cmd_symplectic(args):
    if args.family == "cpn" and not args.standard_omega:
        return _symplectic_cpn(args)
    if args.standard_omega:
        F = symp.omega_standard(_need(args.m, "--m"))
    else:
        if not args.form:
            raise UsageError("--form or --standard-omega is required")
        F = symp.SymplecticForm.from_text(build_model(args), args.form)
    out = {"form": str(F.element), "closed": F.is_closed(), "nondegenerate": F.is_nondegenerate()}
    if args.lefschetz or args.harmonic:
        if not (out["closed"] and out["nondegenerate"]):
            raise symp.DegenerateForm("Lefschetz and harmonic checks need a symplectic form")
    if args.lefschetz:
        rep = symp.hard_lefschetz(F.dga, cohom.class_of(F.dga, F.element, 2), F.half_dim)
        out.update(_lefschetz_json(rep))
    if args.harmonic:
        out["harmonic_classes"] = symp.harmonic_report(F)
        out["harmonic_all"] = all(h["representable"] == h["total"] for h in out["harmonic_classes"])
    return out


def cmd_projectivize(args):
    base = build_model(args)
    chern = _chern(base, args.chern, args.k)
    P = blowup.projectivize(base, args.k, chern, _env_cap())
    T = P.total
    top = T.top_degree
    bb = cohom.betti_numbers(base, min(top, base.top_degree))
    out = {
        "k": args.k,
        "chern": [str(c) for c in P.chern],
        "degree_cap": T.degree_cap,
        "betti": cohom.betti_numbers(T, top),
    }
    if all(not c for c in P.chern):
        out["leray_hirsch"] = [blowup.leray_hirsch_betti(bb, args.k, q) for q in range(top + 1)]
    if 2 * args.k <= top:
        out["relation_vanishes"] = cohom.is_exact(T, P.relation(), 2 * args.k)
    return out


def cmd_blowup_betti(args):
    D = build_model(args)
    if D.capped:
        raise UsageError("blow-up bookkeeping needs a finite-dimensional model of Y")
    yb = cohom.betti_numbers(D)
    prof = blowup.blowup_betti(args.N, yb)
    return {"N": prof.N, "k": prof.k, "y_betti": list(prof.y_betti), "betti": list(prof.betti),
            "euler": prof.euler, "duality": prof.satisfies_duality()}


def cmd_lemma(args):
    if args.which == 1:
        base = models.chevalley_eilenberg(models.vn(2 * _need(args.m, "--m")))
        rep = blowup.lemma1_check(args.m, args.k, _chern(base, args.chern, args.k))
    else:
        target = _need(args.target, "--target")
        base = models.kodaira_thurston() if target == "kt" else models.chevalley_eilenberg(models.vn(4))
        rep = blowup.lemma2_check(target, args.k, _chern(base, args.chern, args.k))
    out = {"lemma": rep.which, "target": rep.target, "k": rep.k,
           "chern": [str(c) for c in rep.model.chern], "cup_vanishes": rep.cup_vanishes}
    out.update(verdict_to_json(rep.verdict))
    out["flagged"] = not rep.verdict.nontrivial
    return out


def cmd_conn_sum(args):
    return {"q": args.q, "dim": args.dim,
            "survives": blowup.massey_survives_connected_sum(args.q, args.dim)}


# -- plumbing --------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--output", "-o", help="write the report to a file")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", choices=FAMILIES)
    fam.add_argument("--n", type=int)
    fam.add_argument("--m", type=int)
    fam.add_argument("--from-file", dest="from_file")

    p = argparse.ArgumentParser(prog="rht", description="Rational homotopy workbench")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("model", parents=[common, fam], help="dump a model as JSON")
    s.set_defaults(func=cmd_model)

    s = sub.add_parser("betti", parents=[common, fam], help="Betti numbers (and ring table)")
    s.add_argument("--max-degree", type=int)
    s.add_argument("--ring", action="store_true")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("cup", parents=[common, fam], help="cup product of two classes")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_cup)

    s = sub.add_parser("massey", parents=[common, fam], help="triple Massey product")
    for flag in ("--a", "--b", "--c"):
        s.add_argument(flag, required=True)
    s.set_defaults(func=cmd_massey)

    s = sub.add_parser("formality-scan", parents=[common, fam], help="search for Massey obstructions")
    s.add_argument("--max-degree", type=int)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("symplectic", parents=[common, fam], help="symplectic form checks")
    s.add_argument("--form")
    s.add_argument("--standard-omega", action="store_true")
    s.add_argument("--lefschetz", action="store_true")
    s.add_argument("--harmonic", action="store_true")
    s.set_defaults(func=cmd_symplectic)

    s = sub.add_parser("projectivize", parents=[common, fam], help="projectivization model")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--chern", help="comma-separated c_1,...,c_k (missing ones are 0)")
    s.set_defaults(func=cmd_projectivize)

    s = sub.add_parser("blowup-betti", parents=[common, fam], help="Betti numbers of CP^N blown up along Y")
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(func=cmd_blowup_betti)

    s = sub.add_parser("lemma", parents=[common], help="Massey computations on projectivizations")
    s.add_argument("--which", type=int, choices=(1, 2), required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--target", choices=sorted(blowup.LEMMA2_TARGETS))
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--chern")
    s.set_defaults(func=cmd_lemma)

    s = sub.add_parser("conn-sum-survival", parents=[common], help="connected-sum degree bookkeeping")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--dim", type=int, required=True)
    s.set_defaults(func=cmd_conn_sum)
    return p


def render_pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and not all(
                    isinstance(v, (int, str, bool)) for v in (val.values() if isinstance(val, dict) else val)):
                lines.append(f"{pad}{key}:")
                lines.append(render_pretty(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat(val)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.append(render_pretty(item, indent + 1))
            else:
                lines.append(f"{pad}- {_flat(item)}")
    else:
        lines.append(f"{pad}{_flat(obj)}")
    return "\n".join(lines)


def _flat(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_flat(v) for v in val) + "]"
    if isinstance(val, dict):
        return "{" + ", ".join(f"{k}: {_flat(v)}" for k, v in val.items()) + "}"
    if isinstance(val, bool):
        return "yes" if val else "no"
    return str(val)


def _error(kind: str, exc: Exception, **extra) -> str:
    report = {"error": kind, "message": str(getattr(exc, "message", exc))}
    report.update(extra)
    return dumps(report)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        report = args.func(args)
    except ElementParseError as e:
        print(_error(type(e).__name__, e, text=e.text, line=e.line, column=e.column), file=stderr)
        return 2
    except json.JSONDecodeError as e:
        print(_error("JSONDecodeError", e, line=e.lineno, column=e.colno), file=stderr)
        return 2
    except (UsageError, OSError) as e:
        print(_error(type(e).__name__, e), file=stderr)
        return 2
    except (NotADifferential, models.JacobiFailure, CapExceeded, cohom.NotClosed, NotHomogeneous,
            MismatchedAlgebra, blowup.ChernNotClosed, blowup.ChernWrongDegree, blowup.BadCodimension,
            symp.DegenerateForm, symp.NotInvariantComplex, models.BadDimension,
            KeyError, ValueError) as e:
        extra = {"generator": e.generator} if isinstance(e, NotADifferential) else {}
        print(_error(type(e).__name__, e, **extra), file=stderr)
        return 1
    text = render_pretty(report) if args.pretty else dumps(report)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text, file=stdout)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

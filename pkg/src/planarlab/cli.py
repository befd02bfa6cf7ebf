"""Command-line frontend.

JSON on stdout is the machine-readable compatibility surface: one document
per invocation, keys sorted, no timestamps except the elapsed_ms field of
search reports, which --canonical omits so identical invocations are
byte-identical.  Text output is human-oriented and unstable.  Diagnostics go
to stderr.

Exit codes: 0 success/pass, 2 usage or input error, 3 budget exceeded,
4 verification failure.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import binom, classify, cyclo, mub, polyfun, search
from .errors import BudgetExceeded, PlanarLabError
from .field import make_field
from .polyfun import Poly, parse_poly

BUDGET_ENV = "PLANARLAB_BUDGET"


def _fail(message: str, code: int = 2):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _field(p: int, r: int):
    try:
        return make_field(p, r)
    except PlanarLabError as exc:
        _fail(str(exc))


def _poly(field, text: str) -> Poly:
    try:
        return parse_poly(text, field)
    except PlanarLabError as exc:
        _fail(str(exc))


def _emit_json(payload) -> None:
    click.echo(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _zp_poly_text(coeffs) -> str:
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            xs = "x" if e == 1 else f"x^{e}"
            parts.append(xs if c == 1 else f"{c}*{xs}")
    return " + ".join(parts) if parts else "0"


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Planar/Alltop classification, MUB construction, and exhaustive search
    over small odd-characteristic finite fields."""


@main.command("field-info")
@click.option("--p", type=int, required=True, help="characteristic (odd prime)")
@click.option("--r", type=int, default=1, show_default=True, help="extension degree")
@click.option("--mul-table", is_flag=True, help="include the q x q product table (q <= 49)")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def field_info(p, r, mul_table, fmt):
    """Describe GF(p^r) and its canonical modulus."""
    fld = _field(p, r)
    payload = fld.to_json_dict()
    payload["q"] = fld.q
    payload["modulus_text"] = _zp_poly_text(fld.modulus)
    if mul_table:
        if fld.q > 49:
            _fail("--mul-table is limited to q <= 49")
        payload["mul_table"] = [
            [fld.mul(a, b) for b in range(fld.q)] for a in range(fld.q)
        ]
    if fmt == "json":
        _emit_json(payload)
        return
    click.echo(f"GF({p}^{r}) with q = {fld.q}")
    click.echo(f"modulus: {payload['modulus_text']}  coefficients (low->high): "
               f"{list(fld.modulus)}")
    if mul_table:
        for row in payload["mul_table"]:
            click.echo(" ".join(f"{v:>3}" for v in row))


_WITNESS_KEYS = {
    "permutation": ("x", "x2"),
    "additive": ("x", "y"),
    "planar": ("a", "x", "x2"),
    "alltop": ("a", "b", "x", "x2"),
}

_WITNESS_FNS = {
    "permutation": classify.permutation_witness,
    "additive": classify.additive_witness,
    "planar": classify.planar_witness,
    "alltop": classify.alltop_witness,
}


@main.command("test")
@click.option("--p", type=int, required=True)
@click.option("--r", type=int, default=1, show_default=True)
@click.option("--poly", "poly_text", required=True, help="polynomial in the text grammar")
@click.option("--mode", type=click.Choice(sorted(_WITNESS_KEYS)), required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
def cmd_test(p, r, poly_text, mode, fmt):
    """Classify a polynomial function; the witness is the first violation found."""
    fld = _field(p, r)
    f = _poly(fld, poly_text)
    witness = _WITNESS_FNS[mode](f)
    verdict = witness is None
    payload = {
        "field": fld.to_json_dict(),
        "poly": str(f),
        "mode": mode,
        "verdict": verdict,
        "witness": None if verdict else dict(zip(_WITNESS_KEYS[mode], witness)),
    }
    if fmt == "json":
        _emit_json(payload)
    else:
        click.echo(f"{mode}({f}) over {fld!r}: {verdict}")
        if not verdict:
            click.echo(f"witness: {payload['witness']}")


@main.command("delta")
@click.option("--p", type=int, required=True)
@click.option("--r", type=int, default=1, show_default=True)
@click.option("--poly", "poly_text", required=True)
@click.option("--a", "a_enc", type=int, required=True, help="shift encoding")
@click.option("--b", "b_enc", type=int, default=None, help="second shift (double difference)")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_delta(p, r, poly_text, a_enc, b_enc, fmt):
    """Print f(x+a) - f(x), or the double difference when --b is given."""
    fld = _field(p, r)
    f = _poly(fld, poly_text)
    try:
        result = (
            polyfun.delta(f, a_enc)
            if b_enc is None
            else polyfun.double_delta(f, a_enc, b_enc)
        )
    except (PlanarLabError, ValueError) as exc:
        _fail(str(exc))
    if fmt == "json":
        _emit_json({"poly": str(result)})
    else:
        click.echo(str(result))


@main.command("search")
@click.option("--p", type=int, required=True)
@click.option("--r", type=int, default=1, show_default=True)
@click.option("--family", type=click.Choice(sorted(search.FAMILY_KINDS)), required=True)
@click.option("--max-deg", type=int, default=None, help="degree bound (all-reduced only)")
@click.option("--mode", type=click.Choice(sorted(search.MODES)), required=True)
@click.option("--budget", type=int, default=None,
              help=f"candidate budget (default {search.DEFAULT_CANDIDATE_BUDGET}, "
                   f"or the {BUDGET_ENV} environment variable)")
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--canonical", is_flag=True, help="omit elapsed_ms for byte-stable output")
def cmd_search(p, r, family, max_deg, mode, budget, workers, canonical):
    """Run an enumeration campaign and print the report as JSON."""
    fld = _field(p, r)
    try:
        fam = search.FamilySpec(family, max_deg)
    except ValueError as exc:
        _fail(str(exc))
    if budget is None and os.environ.get(BUDGET_ENV):
        try:
            budget = int(os.environ[BUDGET_ENV])
        except ValueError:
            _fail(f"{BUDGET_ENV} must be an integer")
    try:
        report = search.run_search(fld, fam, mode, budget=budget, workers=workers)
    except BudgetExceeded as exc:
        _fail(str(exc), code=3)
    _emit_json(report.to_json_dict(canonical=canonical))


@main.command("mubs")
@click.option("--p", type=int, required=True)
@click.option("--r", type=int, default=1, show_default=True)
@click.option("--construction", type=click.Choice(["planar", "alltop"]), required=True)
@click.option("--pi", "pi_text", default=None,
              help="generating planar polynomial (planar construction; default x^2)")
@click.option("--action", type=click.Choice(["build", "verify", "export"]), required=True)
@click.option("--export-format", "fmt", type=click.Choice(["json", "csv", "float-json"]),
              default="json", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="output file (default stdout)")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="existing export to verify or convert")
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--canonical", is_flag=True, help="accepted for symmetry; reports carry no timings")
def cmd_mubs(p, r, construction, pi_text, action, fmt, out_path, in_path, workers, canonical):
    """Build, verify, or convert a complete MUB set."""
    fld = _field(p, r)
    if construction == "alltop" and pi_text is not None:
        _fail("--pi applies to the planar construction only")

    def build():
        try:
            if construction == "planar":
                pi = _poly(fld, pi_text or "x^2")
                return mub.build_planar_mubs(fld, pi)
            return mub.build_alltop_mubs(fld)
        except PlanarLabError as exc:
            _fail(str(exc))

    def load(path):
        with open(path, "rb") as fh:
            data = fh.read()
        in_fmt = "csv" if path.endswith(".csv") else "json"
        try:
            return mub.import_mubs(data, in_fmt, field=fld, construction=construction)
        except (PlanarLabError, ValueError, KeyError, json.JSONDecodeError) as exc:
            _fail(f"cannot read MUB export: {exc}")

    def write(data: bytes):
        if out_path is None:
            sys.stdout.write(data.decode())
        else:
            try:
                with open(out_path, "wb") as fh:
                    fh.write(data)
            except OSError as exc:
                _fail(str(exc))

    if action == "build":
        write(mub.export_mubs(build(), fmt))
        return
    if action == "export":
        if in_path is None:
            _fail("--action export needs --in")
        write(mub.export_mubs(load(in_path), fmt))
        return
    m = load(in_path) if in_path is not None else build()
    try:
        report = mub.verify_mub_set(m, workers=workers)
    except ValueError as exc:
        _fail(str(exc))
    _emit_json(report.to_json_dict())
    if not report.passed:
        sys.exit(4)


@main.command("charsum")
@click.option("--p", type=int, required=True)
@click.option("--r", type=int, default=1, show_default=True)
@click.option("--poly", "poly_text", required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_charsum(p, r, poly_text, fmt):
    """Exact squared magnitude of the trace character sum of a polynomial."""
    fld = _field(p, r)
    f = _poly(fld, poly_text)
    vec = cyclo.char_sum(fld, f)
    result = cyclo.mag_sq(vec)
    payload = {
        "field": fld.to_json_dict(),
        "poly": str(f),
        "counts": list(vec.counts),
        "d": list(result.autocorrelation),
        "is_rational_integer": result.is_rational_integer,
        "mag_sq": result.value,
    }
    if fmt == "json":
        _emit_json(payload)
        return
    click.echo(f"counts: {list(vec.counts)}")
    click.echo(f"d:      {list(result.autocorrelation)}")
    if result.is_rational_integer:
        click.echo(f"|S|^2 = {result.value}")
    else:
        click.echo("|S|^2 is not a rational integer")


@main.command("binom")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--p", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_binom(n, k, p, fmt):
    """binom(n, k) mod p with the base-p digit-domination explanation."""
    if n < 0 or k < 0:
        _fail("n and k must be non-negative")
    if p < 2:
        _fail("p must be a prime")
    residue = binom.binom_mod_p(n, k, p)
    nd = binom.base_p_digits(n, p)
    kd = binom.base_p_digits(k, p)
    width = max(len(nd), len(kd))
    nd += [0] * (width - len(nd))
    kd += [0] * (width - len(kd))
    positions = [
        {
            "n_digit": a,
            "k_digit": b,
            "binom": binom.binom_mod_p(a, b, p),
        }
        for a, b in zip(nd, kd)
    ]
    dominated = all(b <= a for a, b in zip(nd, kd))
    payload = {
        "n": n,
        "k": k,
        "p": p,
        "residue": residue,
        "n_digits": nd,
        "k_digits": kd,
        "positions": positions,
        "dominated": dominated,
    }
    if fmt == "json":
        _emit_json(payload)
        return
    click.echo(f"C({n},{k}) mod {p} = {residue}")
    click.echo(f"n digits (base {p}, low->high): {nd}")
    click.echo(f"k digits (base {p}, low->high): {kd}")
    for i, pos in enumerate(positions):
        note = "" if pos["k_digit"] <= pos["n_digit"] else "  <- k digit exceeds n digit"
        click.echo(
            f"position {i}: C({pos['n_digit']},{pos['k_digit']}) = {pos['binom']}{note}"
        )
    click.echo(
        "nonzero (every k digit dominated)" if dominated else "zero (domination fails)"
    )


if __name__ == "__main__":  # pragma: no cover
    main()

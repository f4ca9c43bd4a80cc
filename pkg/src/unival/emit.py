"""Plain, JSON, LaTeX, and CSV emitters.

Plain output orders terms by descending t-power within each degree, matching
the ordered monomial bases; the LaTeX emitter uses the conventional
typeset order (ascending t-power, constants and s-powers first) instead.
All emitters are deterministic: identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import SOAlgebra
from .exact import ExactMatrix
from .poly import GradedPoly, Monomial, format_monomial, poly_format
from .suite import SuiteReport


def rational_latex(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _power_latex(symbol: str, exponent: int) -> str:
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}" if exponent < 10 else f"{symbol}^{{{exponent}}}"


def monomial_latex(mono: Monomial) -> str:
    p, q = mono
    pieces = []
    if p:
        pieces.append(_power_latex("s", p))
    if q:
        pieces.append(_power_latex("t", q))
    return "".join(pieces) if pieces else "1"


def poly_latex(poly: GradedPoly) -> str:
    if not poly:
        return "0"
    ordered = sorted(poly.terms.items(), key=lambda item: (2 * item[0][0] + item[0][1], -item[0][0]))
    chunks: list[str] = []
    for mono, coeff in ordered:
        magnitude = abs(coeff)
        if mono == (0, 0):
            body = rational_latex(magnitude)
        elif magnitude == 1:
            body = monomial_latex(mono)
        else:
            body = f"{rational_latex(magnitude)}{monomial_latex(mono)}"
        if not chunks:
            chunks.append(f"-{body}" if coeff < 0 else body)
        else:
            chunks.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(chunks)


def matrix_plain(m: ExactMatrix) -> str:
    cells = [[str(x) for x in m.row(i)] for i in range(m.rows)]
    widths = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells
    )


def matrix_latex(m: ExactMatrix) -> str:
    body = " \\\\\n".join(
        " & ".join(rational_latex(x) for x in m.row(i)) for i in range(m.rows)
    )
    return f"\\begin{{bmatrix}}\n{body}\n\\end{{bmatrix}}"


def format_matrix(m: ExactMatrix, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(m.to_json(), indent=2)
    if fmt == "latex":
        return matrix_latex(m)
    return matrix_plain(m)


def format_poly(poly: GradedPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(poly_format(poly))
    if fmt == "latex":
        return poly_latex(poly)
    return poly_format(poly)


def _model_json(algebra) -> dict:
    kind = "SO" if isinstance(algebra, SOAlgebra) else "U"
    return {"model": kind, "n": algebra.n}


def tensor_json(tensor) -> dict:
    blocks = []
    for (dl, dr), matrix in tensor.sorted_blocks():
        blocks.append(
            {
                "degrees": [dl, dr],
                "row_basis": [format_monomial(m) for m in tensor.left.basis(dl)],
                "col_basis": [format_monomial(m) for m in tensor.right.basis(dr)],
                "matrix": matrix.to_json(),
            }
        )
    return {"left": _model_json(tensor.left), "right": _model_json(tensor.right), "blocks": blocks}


def _block_terms(tensor, dl: int, dr: int, matrix: ExactMatrix):
    rows = tensor.left.basis(dl)
    cols = tensor.right.basis(dr)
    for i, row_mono in enumerate(rows):
        for j, col_mono in enumerate(cols):
            if matrix[i, j]:
                yield row_mono, col_mono, matrix[i, j]


def tensor_plain(tensor) -> str:
    if not tensor.blocks:
        return "0"
    lines = []
    for (dl, dr), matrix in tensor.sorted_blocks():
        chunks: list[str] = []
        for row_mono, col_mono, coeff in _block_terms(tensor, dl, dr, matrix):
            magnitude = abs(coeff)
            pair = f"{format_monomial(row_mono)}(x){format_monomial(col_mono)}"
            body = pair if magnitude == 1 else f"{magnitude}*{pair}"
            if not chunks:
                chunks.append(f"-{body}" if coeff < 0 else body)
            else:
                chunks.append(f"{'-' if coeff < 0 else '+'} {body}")
        lines.append(f"({dl},{dr}): " + " ".join(chunks))
    return "\n".join(lines)


def tensor_latex(tensor) -> str:
    if not tensor.blocks:
        return "0"
    lines = []
    for (dl, dr), matrix in tensor.sorted_blocks():
        chunks: list[str] = []
        for row_mono, col_mono, coeff in _block_terms(tensor, dl, dr, matrix):
            magnitude = abs(coeff)
            pair = f"{monomial_latex(row_mono)} \\otimes {monomial_latex(col_mono)}"
            body = pair if magnitude == 1 else f"{rational_latex(magnitude)}\\, {pair}"
            if not chunks:
                chunks.append(f"-{body}" if coeff < 0 else body)
            else:
                chunks.append(f"{'-' if coeff < 0 else '+'} {body}")
        lines.append("&" + " ".join(chunks))
    body = " \\\\\n".join(lines)
    return f"\\begin{{aligned}}\n{body}\n\\end{{aligned}}"


def format_tensor(tensor, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(tensor_json(tensor), indent=2)
    if fmt == "latex":
        return tensor_latex(tensor)
    return tensor_plain(tensor)


def format_basis(monomials, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([format_monomial(m) for m in monomials])
    if fmt == "latex":
        return ", ".join(monomial_latex(m) for m in monomials)
    return ", ".join(format_monomial(m) for m in monomials)


def format_positivity(rows: list[tuple[int, int, bool]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            [{"n": n, "k": k, "positive_definite": flag} for n, k, flag in rows], indent=2
        )
    if fmt == "csv":
        lines = ["n,k,positive_definite"]
        lines += [f"{n},{k},{'true' if flag else 'false'}" for n, k, flag in rows]
        return "\n".join(lines)
    lines = [f"{'n':>3} {'k':>3}  positive_definite"]
    lines += [f"{n:>3} {k:>3}  {'yes' if flag else 'NO'}" for n, k, flag in rows]
    return "\n".join(lines)


def format_report(report: SuiteReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2)
    name_width = max(len(entry.name) for entry in report.entries)
    scope_width = max(len(entry.scope) for entry in report.entries)
    lines = []
    for entry in report.entries:
        status = "PASS" if entry.passed else "FAIL"
        line = f"{status}  {entry.name.ljust(name_width)}  {entry.scope.ljust(scope_width)}"
        if entry.counterexample:
            line += f"  {entry.counterexample}"
        lines.append(line)
    lines.append(
        f"{report.passed_count} passed, {report.failed_count} failed (n_max = {report.n_max})"
    )
    return "\n".join(lines)

"""Report rendering: delimited output plus matplotlib figures on disk."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .verify import CheckResult

NUMERIC_FIELDS = [
    "label",
    "n",
    "k",
    "j",
    "formula_norm",
    "numeric_norm",
    "gap",
    "entanglement",
]


def write_check_csv(results: list[CheckResult], outdir: Path) -> Path:
    path = outdir / "verify_results.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "passed", "detail"])
        for r in results:
            writer.writerow([r.label, "pass" if r.passed else "FAIL", r.detail.splitlines()[0]])
    return path


def write_numeric_csv(rows: list[dict], outdir: Path) -> Path:
    path = outdir / "suite_norms.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=NUMERIC_FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow({key: row[key] for key in NUMERIC_FIELDS})
    return path


def render_figures(rows: list[dict], outdir: Path) -> list[Path]:
    """Numeric-vs-formula scatter and per-code entanglement bars."""
    written: list[Path] = []
    if not rows:
        return written

    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    formula = [r["formula_norm"] for r in rows]
    numeric = [r["numeric_norm"] for r in rows]
    lo, hi = min(formula) * 0.9, 1.05
    ax.plot([lo, hi], [lo, hi], color="0.6", lw=1, label="numeric = formula")
    ax.scatter(formula, numeric, s=28, zorder=3)
    ax.set_xlabel("closed-form injective norm")
    ax.set_ylabel("alternating-optimization estimate")
    ax.set_title("Numeric vs closed-form injective norm")
    ax.legend(frameon=False)
    fig.tight_layout()
    path = outdir / "norms_compare.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(max(5.0, 0.35 * len(rows)), 4.0))
    labels = [r["label"] for r in rows]
    ax.bar(range(len(rows)), [r["entanglement"] for r in rows], color="tab:blue")
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("geometric entanglement  k - j")
    ax.set_title("Geometric entanglement across the code suite")
    fig.tight_layout()
    path = outdir / "entanglement.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written


def write_report(results: list[CheckResult], rows: list[dict], outdir) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [write_check_csv(results, outdir), write_numeric_csv(rows, outdir)]
    written.extend(render_figures(rows, outdir))
    return written

"""Render discrimination-line figures for the measure catalog.

Writes one SVG per measure family plus the underlying line CSVs:

    python scripts/make_figures.py --output figures --p 0
    python scripts/make_figures.py --output figures_imbalanced --p 0.5

Each figure overlays the lines of related measures on the (c_x, c_y) plane;
the dashed diagonal marks equal retention. Points above it mean the measure
ranks the class-1-eroded classifier higher at equal overall damage.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from confmeasures.discrimination import discrimination_line
from confmeasures.matrixio import write_line_csv
from confmeasures.measures import MeasureKind
from confmeasures.plotting import PlotDocument, PlotLine, write_svg

FIGURES = {
    "marginal_rates_class1": [
        (MeasureKind.TPR, 1),
        (MeasureKind.TNR, 1),
        (MeasureKind.PPV, 1),
        (MeasureKind.NPV, 1),
    ],
    "overlap_class1": [
        (MeasureKind.F_MEASURE, 1),
        (MeasureKind.JCC, 1),
        (MeasureKind.ICSI, 1),
        (MeasureKind.KULCZYNSKI, 1),
    ],
    "marginal_rates_class2": [
        (MeasureKind.TPR, 2),
        (MeasureKind.TNR, 2),
        (MeasureKind.PPV, 2),
        (MeasureKind.NPV, 2),
    ],
    "multiclass": [
        (MeasureKind.OSR, None),
        (MeasureKind.CSI, None),
        (MeasureKind.COHEN_KAPPA, None),
        (MeasureKind.SCOTT_PI, None),
        (MeasureKind.MAXWELL_RE, None),
    ],
}


def label_for(kind, class_index):
    if class_index is None:
        return kind.value
    return f"{kind.value}{class_index}"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--output", required=True, help="figure directory")
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--p", type=float, default=0.0)
    parser.add_argument("--grid-step", type=float, default=0.02)
    args = parser.parse_args(argv)

    out = pathlib.Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for name, members in FIGURES.items():
        plot_lines = []
        for kind, class_index in members:
            line = discrimination_line(
                kind, k=args.k, p=args.p, class_index=class_index,
                grid_step=args.grid_step,
            )
            label = label_for(kind, class_index)
            write_line_csv(line, out / f"{name}_{label}.csv")
            plot_lines.append(PlotLine(label=label, rows=line.rows))
        doc = PlotDocument(
            title=f"{name.replace('_', ' ')}  (k={args.k}, p={args.p:g})",
            lines=tuple(plot_lines),
        )
        write_svg(doc, out / f"{name}.svg")
        print(f"wrote {out / f'{name}.svg'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

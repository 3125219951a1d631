# cli/rendering.py
"""
Text and JSON output for the management commands. Output is a pure function
of the result, so repeated runs print identical bytes.
"""

import csv
import io
import json

SEARCH_COLUMNS = [
    "construction", "n", "s", "h", "reg", "taylor_bound",
    "kappa", "balbarath_bound", "slack", "note",
]


def to_json(data):
    return json.dumps(data, indent=2, sort_keys=True)


def _yes_no(value):
    return "yes" if value else "no"


def render_analysis_text(analysis):
    lines = [
        f"complex:        {analysis['complex']}",
        f"n:              {analysis['n']}",
        f"dim:            {analysis['dim']}",
        f"f-vector:       {analysis['f_vector']}",
        f"pure:           {_yes_no(analysis['is_pure'])}",
        f"flag:           {_yes_no(analysis['is_flag'])}",
        f"pseudomanifold: {_yes_no(analysis['is_pseudomanifold'])}",
        f"s:              {analysis['s'] if analysis['s'] is not None else '- (full simplex)'}",
    ]
    for p, values in analysis["betti"].items():
        nonzero = ", ".join(f"{d}:{v}" for d, v in values.items() if v) or "acyclic"
        lines.append(f"betti GF({p}):    {nonzero}")

    reg = analysis["regularity"]
    lines.append(f"regularity:     {reg['reg']} (H̃_{reg['witness_degree']} on {reg['witness_set']})")
    connectivity = analysis["connectivity"]
    if connectivity is None:
        lines.append("kappa:          - (fewer than 2 vertices)")
    else:
        lines.append(f"kappa:          {connectivity['kappa']} (separator {connectivity['min_separator']})")

    cert = analysis["certificate"]
    if cert:
        lines.append(
            f"vertex minimal {cert['h']}-cycle: yes over GF({cert['field']}) "
            f"({cert['method']}, {cert['checked_subsets']} subsets)"
        )
    elif analysis["certificate_degree"] is not None:
        lines.append(f"vertex minimal {analysis['certificate_degree']}-cycle: no")
    lines.append("")
    lines.append(f"betti table over GF({analysis['betti_table']['field']}):")
    lines.append(analysis["betti_table_text"])
    return "\n".join(lines)


def render_report_text(report):
    lines = [f"{report.statement} on {report.instance}: {str(report.status).upper()}"]
    for key, value in sorted(report.summary.items()):
        if key != "certificate":
            lines.append(f"  {key}: {value}")
    for witness in report.witnesses:
        if not witness["ok"]:
            lines.append(f"  FAILED {witness['kind']}: {witness}")
    return "\n".join(lines)


def render_search_csv(rows):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=SEARCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: "" if row.get(column) is None else row[column] for column in SEARCH_COLUMNS})
    return buffer.getvalue()

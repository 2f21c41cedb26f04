"""ASCII and Graphviz DOT renderings of cirquents and proofs."""

from __future__ import annotations

from dataclasses import dataclass

from .checker import Proof
from .cirquent import Cirquent
from .rules import AndIntro, AxiomIntro, Duplication, Exchange, OrIntro, Weakening

RULE_LABELS = {
    AxiomIntro: "A",
    Exchange: "E",
    Weakening: "W",
    Duplication: "D",
    OrIntro: "\\/",
    AndIntro: "/\\",
}


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"  # "ascii" or "dot"
    show_indices: bool = True
    label_groups: bool = True

    def __post_init__(self):
        if self.format not in ("ascii", "dot"):
            raise ValueError(f"unknown render format {self.format!r}")


def render(c: Cirquent, spec: RenderSpec = RenderSpec()) -> str:
    if spec.format == "dot":
        return "\n".join(_dot_lines(c, spec, prefix="", indent="  ", name="cirquent")) + "\n"
    return "\n".join(_ascii_lines(c, spec)) + "\n"


def _ascii_lines(c: Cirquent, spec: RenderSpec) -> list[str]:
    cells = [f"{i}:{f.text}" if spec.show_indices else f.text for i, f in enumerate(c.formulas)]
    row = "   ".join(cells)
    bullets = "  ".join(f"*{j}" if spec.label_groups else "*" for j in range(len(c.groups)))
    lines = ["-" * max(len(row), 1), row, bullets]
    for j, g in enumerate(c.groups):
        members = ", ".join(str(i) for i in sorted(g))
        lines.append(f"  group {j}: {members}")
    return lines


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_lines(c: Cirquent, spec: RenderSpec, prefix: str, indent: str, name: str) -> list[str]:
    lines = [f"digraph {name} {{"] if not prefix else []
    lines.append(f"{indent}rankdir=BT;" if not prefix else f"{indent}label={_quote(name)};")
    for i, f in enumerate(c.formulas):
        label = f"{i}: {f.text}" if spec.show_indices else f.text
        lines.append(f"{indent}{prefix}f{i} [shape=box, label={_quote(label)}];")
    for j in range(len(c.groups)):
        label = _quote(f"g{j}") if spec.label_groups else '""'
        lines.append(
            f"{indent}{prefix}g{j} [shape=circle, style=filled, fillcolor=black, "
            f"fontcolor=white, width=0.2, label={label}];"
        )
    for j, g in enumerate(c.groups):
        for i in sorted(g):
            lines.append(f"{indent}{prefix}g{j} -> {prefix}f{i};")
    if not prefix:
        lines.append("}")
    return lines


def render_proof(p: Proof, spec: RenderSpec = RenderSpec()) -> str:
    """Every step's result in order; steps without results are skipped."""
    if spec.format == "dot":
        lines = ["digraph proof {", "  rankdir=BT;", "  compound=true;"]
        for k, step in enumerate(p.steps):
            if step.result is None:
                continue
            rule = RULE_LABELS[type(step.application)]
            lines.append(f"  subgraph cluster_{k} {{")
            lines += _dot_lines(step.result, spec, prefix=f"s{k}_", indent="    ", name=f"step {k} ({rule})")
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines) + "\n"
    out = []
    for k, step in enumerate(p.steps):
        if step.result is None:
            continue
        out.append(f"step {k}: {RULE_LABELS[type(step.application)]}")
        out += _ascii_lines(step.result, spec)
        out.append("")
    return "\n".join(out)

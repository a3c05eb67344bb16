"""Text rendering of configurations, audits and graph statistics."""

from fractions import Fraction

from ....core.domain import (
    AuditReport,
    Configuration,
    GraphStats,
    LightEdge,
    LightFourFace,
    TripleTriangleCenter,
)


def format_fraction(value: Fraction) -> str:
    """Always ``p/q``, including integers (``-8/1``)."""
    return f"{value.numerator}/{value.denominator}"


def _path(vertices: tuple[int, ...]) -> str:
    return "-".join(str(v) for v in vertices)


def format_configuration(cfg: Configuration) -> str:
    """One line: ``lightedge u v``, ``fourface u v w x``, ``tritri ...`` or ``altcycle ...``."""
    if isinstance(cfg, LightEdge):
        return f"{cfg.kind} {cfg.u} {cfg.v}"
    if isinstance(cfg, LightFourFace):
        return f"{cfg.kind} {' '.join(map(str, cfg.cycle))}"
    if isinstance(cfg, TripleTriangleCenter):
        return (
            f"{cfg.kind} center={cfg.center} t1={_path(cfg.triangle1)} "
            f"t2={_path(cfg.triangle2)} t3={_path(cfg.triangle3)} "
            f"pendant={_path(cfg.pendant_edge)}"
        )
    return f"{cfg.kind} {' '.join(map(str, cfg.sequence))}"


def format_audit(report: AuditReport) -> str:
    final = report.final
    lines = [f"ruleset = {report.ruleset.label}"]
    lines += [f"charge v {v} = {format_fraction(c)}" for v, c in sorted(final.vertex_charge.items())]
    lines += [f"charge f {f} = {format_fraction(c)}" for f, c in sorted(final.face_charge.items())]
    if final.bank is not None:
        lines.append(f"bank = {format_fraction(final.bank)}")
    lines.append(f"total = {format_fraction(report.total)}")
    lines.append(f"negatives: {', '.join(report.negatives) if report.negatives else 'none'}")
    lines.append(f"positive: {'yes' if report.strictly_positive_element_exists else 'no'}")
    checks = "; ".join(f"{p.name} {'ok' if p.holds else 'unmet'}" for p in report.preconditions)
    lines.append(f"preconditions: {checks}")
    return "\n".join(lines) + "\n"


def format_stats(stats: GraphStats) -> str:
    euler = str(stats.euler.value)
    if not stats.euler.connected:
        euler += f" (disconnected: {stats.euler.components} components)"
    return (
        f"n = {stats.n}\n"
        f"edges = {stats.edges}\n"
        f"faces = {stats.faces}\n"
        f"max_degree = {stats.max_degree}\n"
        f"min_degree = {stats.min_degree}\n"
        f"kites = {stats.kites}\n"
        f"euler = {euler}\n"
    )

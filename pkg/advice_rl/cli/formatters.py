"""
Human-readable reports rendered from the Jinja2 templates in
advice_rl/templates.
"""

from pathlib import Path
from typing import List

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from advice_rl.harness.models import AssumptionReport
from advice_rl.stats.anova import AnovaResult
from advice_rl.stats.curves import GroupSummary, format_p_value

TEMPLATES_DIR = Path(__file__).resolve().parent.parent / "templates"

templates = Environment(
    loader=FileSystemLoader(str(TEMPLATES_DIR)),
    undefined=StrictUndefined,
    keep_trailing_newline=True,
)
templates.filters["float_text"] = lambda value: repr(float(value))


def render_comparison(groups: List[GroupSummary], anova: AnovaResult,
                      trials: int, episodes: int) -> str:
    f_text = "inf" if anova.separated else f"{anova.f_statistic:.4f}"
    p_value = format_p_value(anova.p_value)
    return templates.get_template("comparison.txt.j2").render(
        groups=groups,
        anova=anova,
        trials=trials,
        episodes=episodes,
        f_text=f_text,
        p_text=p_value if p_value.startswith("<") else f"= {p_value}",
    )


def render_assumptions(report: AssumptionReport, config_digest: str) -> str:
    return templates.get_template("assumptions.txt.j2").render(
        report=report,
        config_digest=config_digest,
    )

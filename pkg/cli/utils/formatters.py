"""
Formatters for the CLI
Human-readable renderings of profile, verification and descriptor reports.
"""

from typing import Any, Dict, List, Union

from oracle.models import VerificationReport
from profiler.models import ProfileReport


def format_number(number: Union[int, float], decimals: int = 0) -> str:
    """
    Format number with thousands separator.

    Args:
        number: Number to format
        decimals: Number of decimal places

    Returns:
        Formatted number string (e.g., "1,234", "1,234.56")
    """
    if decimals > 0:
        return f"{number:,.{decimals}f}"
    else:
        return f"{int(number):,}"


def format_percentage(fraction: float, decimals: int = 2) -> str:
    """Format a fraction of one (e.g. of a core) as a percentage."""
    return f"{fraction * 100:.{decimals}f}%"


def format_status(passed: bool) -> str:
    return "✅ PASSED" if passed else "❌ FAILED"


def format_overflow(overflow: Any) -> str:
    if overflow is None:
        return "n/a"
    return "yes" if overflow else "no"


def format_profile(report: ProfileReport, latency: int, theory: Dict[str, Any]) -> str:
    """Multi-line summary of one profiled addition."""
    lines = [
        f"Adder: {report.adder} ({report.n} bits)",
        f"Operands: {report.x} + {report.y}",
        f"Result: {report.result if report.result is not None else 'n/a'} "
        f"(expected {report.expected})",
        f"Overflow: {format_overflow(report.overflow)}",
        f"Latency: {latency} steps ({report.total_steps} with I/O)",
        f"Spikes: {format_number(report.spikes)}",
        f"Synaptic events: {format_number(report.synaptic_events)}",
        f"Neurons (with harness): {format_number(report.neurons)}",
        f"Synapses: {format_number(report.synapses)}"
        + ("" if theory['closed_form'] else " (exact count, no closed form)"),
        f"Core fraction: {format_percentage(report.core_fraction)}",
        f"Status: {format_status(report.passed)}",
    ]
    if report.error:
        lines.append(f"Error: {report.error}")
    return "\n".join(lines)


def format_verification(report: VerificationReport, max_failures: int = 5) -> str:
    """One line per report plus the first few failures."""
    extras = []
    if report.seed is not None:
        extras.append(f"seed {report.seed}")
    if report.relay_layers:
        extras.append(f"{report.relay_layers} relay layers")
    if report.per_neuron_thresholds:
        extras.append("per-neuron thresholds")
    if report.spacing is not None:
        extras.append(f"spacing {report.spacing}")
    suffix = f" [{', '.join(extras)}]" if extras else ""

    lines = [
        f"{format_status(report.passed)}  {report.kind} {report.n}-bit {report.mode}: "
        f"{format_number(report.trials)} trials, {len(report.failures)} failures{suffix}"
    ]
    for failure in report.failures[:max_failures]:
        lines.append(
            f"    {failure.x} + {failure.y}: expected {failure.expected}, got {failure.got}"
            + (f" ({failure.error})" if failure.error else "")
        )
    if len(report.failures) > max_failures:
        lines.append(f"    ... {len(report.failures) - max_failures} more")
    return "\n".join(lines)


def format_info(info: Dict[str, Any]) -> str:
    """Descriptor summary: theory vs constructed counts and range status."""
    theory = info['theoretical']
    built = info['constructed']
    lines = [
        f"Adder: {info['adder']} ({info['n']} bits)",
        f"Status: {info['status']} (max supported {info['max_supported_bits']} bits)",
        f"Latency: {built['latency']} steps (theory {theory['time_steps']})",
        f"Neurons: {format_number(built['neurons'])} (theory {format_number(theory['neurons'])})",
        f"Synapses: {format_number(built['synapses'])} (theory {format_number(theory['synapses'])}"
        + ("" if theory['closed_form'] else ", exact count") + ")",
        f"Max delay: {built['max_delay']} steps",
        f"Core fraction: {format_percentage(built['core_fraction'])}",
    ]
    if info.get('partition'):
        lines.append(f"Groups: {info['partition']}")
    if built.get('relay_neurons'):
        lines.append(f"Relay neurons: {built['relay_neurons']}")
    violations: List[Dict[str, Any]] = info.get('violations', [])
    if violations:
        lines.append(f"Violations: {len(violations)}")
        for violation in violations[:5]:
            lines.append(
                f"    {violation['limit']} at {violation['element']}: "
                f"required {violation['required']}, allowed {violation['allowed']}"
            )
    return "\n".join(lines)

"""dw-motion - Dijkgraaf-Witten TQFT computations over finite groups."""

__version__ = "0.1.0"


def main() -> None:
    """CLI entry point."""
    from dw_motion.cli import cli

    cli()

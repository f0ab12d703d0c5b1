#!/usr/bin/env python3
"""Rerun every bundled cost reproduction and print the reports.

Equivalent to calling the CLI subcommands one after another; handy as a
single regression snapshot when a parameter changes.
"""

from click.testing import CliRunner

from gridecon.cli import main

INVOCATIONS = [
    ["lcoe", "--profile", "paper-appendix-A", "--case", "all"],
    ["lcoe", "--profile", "paper-appendix-A", "--case", "low", "--length-km", "4400"],
    ["project-table", "--converter-cost", "150"],
    ["scenario", "--scenario", "greenland", "--connection", "single", "--case", "low"],
    ["scenario", "--scenario", "greenland", "--connection", "single", "--case", "high"],
    ["scenario", "--scenario", "greenland", "--connection", "dual", "--case", "low"],
    ["scenario", "--scenario", "greenland", "--connection", "dual", "--case", "high"],
    ["trade", "--case", "low"],
    ["trade", "--case", "high"],
    ["norned"],
    ["compare-import"],
    [
        "normalize", "--value", "126.7", "--currency", "USD", "--price-year", "1997",
        "--target-currency", "EUR", "--target-year", "2007", "--fx", "0.8587",
        "--inflation", "0.0224",
    ],
]


def run() -> None:
    runner = CliRunner()
    for args in INVOCATIONS:
        print(f"$ gridecon {' '.join(args)}")
        result = runner.invoke(main, args)
        if result.exit_code != 0:
            raise SystemExit(f"failed ({result.exit_code}): {result.output}")
        print(result.output)


if __name__ == "__main__":
    run()

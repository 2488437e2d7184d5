"""Explorer package for xopenergy.

This package provides functionality for:
1. Translation scans of the energy ratio around a zero configuration
2. Multistart maximisation as an independent oracle
3. Reproduction of the reference partitions end to end
4. JSON and CSV export of reports and scan grids
"""

from .examples import EXAMPLE_CASES, ExampleCase, ExampleReport, reproduce_examples, run_example
from .export import dumps, scan_frame, to_jsonable, write_json, write_scan_csv
from .optimize import MultistartResult, StartOutcome, multistart_maximize
from .scan import ScanClass, ScanResult, ScanSample, ScanSpec, ScanStability, classify_scan, scan_f, scan_stability

__all__ = [
    "EXAMPLE_CASES",
    "ExampleCase",
    "ExampleReport",
    "MultistartResult",
    "ScanClass",
    "ScanResult",
    "ScanSample",
    "ScanSpec",
    "ScanStability",
    "StartOutcome",
    "classify_scan",
    "dumps",
    "multistart_maximize",
    "reproduce_examples",
    "run_example",
    "scan_f",
    "scan_frame",
    "scan_stability",
    "to_jsonable",
    "write_json",
    "write_scan_csv",
]

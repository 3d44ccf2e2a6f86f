from .report import COUNTEREXAMPLE_LIMIT, Report
from .scan import COMPLETENESS_NOTE, SCAN_WINDOW, scan_exclusions, scan_grid
from .suites import SUITES, core_suite, identity_suite, run_suites
from .tabulated import TabulatedEndo, dump_table, load_table, save_table, tabulate, tabulate_map
from .verify import decompose, decompose_report, layer_behaviour, verify_homomorphism, verify_injective

__all__ = [
    "COUNTEREXAMPLE_LIMIT", "Report",
    "COMPLETENESS_NOTE", "SCAN_WINDOW", "scan_exclusions", "scan_grid",
    "SUITES", "core_suite", "identity_suite", "run_suites",
    "TabulatedEndo", "dump_table", "load_table", "save_table", "tabulate", "tabulate_map",
    "decompose", "decompose_report", "layer_behaviour", "verify_homomorphism", "verify_injective",
]

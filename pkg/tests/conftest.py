import time


def pytest_configure(config):
    config._suite_start = time.time()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.time() - config._suite_start
    verdict = "PASS" if elapsed < 300 else "FAIL"
    terminalreporter.write_line(
        f"ACCEPTANCE 11 full-suite wall clock {elapsed:.1f}s (< 300s): {verdict}")

import os
import sys

from typing import TextIO

# color escape sequences
COLOR_PASS = "\x1b[0;32m"
COLOR_FAIL = "\x1b[0;31m"
COLOR_MUTED = "\x1b[0;2m"
COLOR_RESET = "\x1b[0m"

# windows console handle and modes
STD_OUTPUT_HANDLE = -11
ENABLE_PROCESSED_OUTPUT = 0x0001
ENABLE_WRAP_AT_EOL_OUTPUT = 0x0002
ENABLE_VIRTUAL_TERMINAL_PROCESSING = 0x0004

NO_COLOR = False


def supports_color(stream: TextIO) -> bool:
    """Return `True` if the stream is an interactive terminal, `False` otherwise.

    Output redirected to a file (or `--out`) never gets escape sequences.
    """

    return hasattr(stream, "isatty") and stream.isatty()


def colored(text: str, color: str) -> str:
    if NO_COLOR or not supports_color(sys.stdout):
        return text

    return f"{color}{text}{COLOR_RESET}"


def passed_or_failed(passed: bool) -> str:
    return colored("PASS", COLOR_PASS) if passed else colored("FAIL", COLOR_FAIL)


def suppress_color(suppress: bool) -> None:
    global NO_COLOR

    NO_COLOR = suppress


def enable_color_escapes() -> None:
    """Turn on escape sequence processing for the Windows console."""

    if os.name != "nt":
        return

    import ctypes

    kernel32 = ctypes.windll.kernel32  # type: ignore
    kernel32.SetConsoleMode(
        kernel32.GetStdHandle(STD_OUTPUT_HANDLE),
        ENABLE_PROCESSED_OUTPUT
        | ENABLE_WRAP_AT_EOL_OUTPUT
        | ENABLE_VIRTUAL_TERMINAL_PROCESSING,
    )

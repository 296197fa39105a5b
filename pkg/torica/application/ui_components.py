from __future__ import annotations

import colorama
from colorama import Fore, Style

colorama.just_fix_windows_console()


class Colors:
    RED = Fore.RED
    GREEN = Fore.GREEN
    YELLOW = Fore.YELLOW
    BLUE = Fore.BLUE
    MAGENTA = Fore.MAGENTA
    CYAN = Fore.CYAN
    RESET = Style.RESET_ALL
    BOLD = Style.BRIGHT


def colorize(text: str, color: str, enabled: bool = True) -> str:
    if not enabled:
        return text
    return f"{Colors.BOLD}{color}{text}{Colors.RESET}"


def heading(text: str, enabled: bool = True) -> str:
    return colorize(text, Colors.CYAN, enabled)

import math
from typing import Optional

SIGNIFICANT_DIGITS = 15


def format_number(value: Optional[float]) -> str:
    """
    Locale-independent text for a float with 15 significant digits; None becomes "".
    """
    if value is None:
        return ""
    if value == 0.0:
        # no "-0"
        return "0"
    if not math.isfinite(value):
        return str(value)
    return format(value, f".{SIGNIFICANT_DIGITS}g")

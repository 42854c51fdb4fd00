from typing import Dict, Final

# ∫ω^m = V(m)·|m|!·m! for |m| <= 5, keyed by the text form of m
KNOWN_INTEGRALS: Final[Dict[str, int]] = {
    "1": 1,
    "2": 5,
    "0,1": 1,
    "3": 61,
    "1,1": 9,
    "0,0,1": 1,
    "4": 1379,
    "2,1": 161,
    "1,0,1": 14,
    "0,2": 19,
    "0,0,0,1": 1,
    "5": 49946,
    "3,1": 4822,
    "2,0,1": 344,
    "1,2": 470,
    "1,0,0,1": 20,
    "0,1,1": 34,
    "0,0,0,0,1": 1,
}

# Zograf's v_n for small n
KNOWN_ZOGRAF: Final[Dict[int, int]] = {3: 1, 4: 1, 5: 5}

from .operations import (
    left_contract,
    left_contract_summed,
    reversion,
    right_contract,
    right_contract_summed,
)

__all__ = [
    "reversion",
    "left_contract",
    "right_contract",
    "left_contract_summed",
    "right_contract_summed",
]

from .base import BaseEndo
from .normal_form import (
    IDENTITY_NF,
    LAMBDA,
    VARPI,
    NormalForm,
    NormalFormEndo,
    alpha,
    nf_apply,
    nf_compose,
    nf_make,
)
from .semidirect import SDPair, nf_to_sd, sd_mul


def get_endo(name: str, **kwargs) -> BaseEndo:
    """Фабрика эндоморфизмов."""
    if name == "identity":
        from .generators import Identity
        return Identity()
    elif name == "lambda":
        from .generators import Shift
        return Shift(**kwargs)
    elif name == "varpi":
        from .generators import Flip
        return Flip(**kwargs)
    elif name == "alpha":
        from .generators import Alpha
        return Alpha(**kwargs)
    elif name == "normal_form":
        return NormalFormEndo(nf_make(**kwargs))
    else:
        raise ValueError(f"Unknown endomorphism: {name}. Available: identity, lambda, varpi, alpha, normal_form")


__all__ = [
    "BaseEndo", "get_endo",
    "NormalForm", "NormalFormEndo", "nf_make", "nf_apply", "nf_compose", "alpha",
    "IDENTITY_NF", "LAMBDA", "VARPI",
    "SDPair", "sd_mul", "nf_to_sd",
]

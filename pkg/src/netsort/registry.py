"""Sorter registry: text labels and the flat numeric spec the compute lanes run.

Label grammar (exactly as they appear in CLI flags and CSV output):

    SN <Best|BN-L|BN-P|BN-R> <swap>     unrolled network sorter
    IS <Def|POp|STL|AIF>                insertion sort variant
    RSS <xyz> <small-sorter label>      register sample sort, cfg digits =
                                        splitters / oversampling / block size
    QS <small-sorter or RSS label>      hybrid quicksort with that base case
    StdSort                             the host platform's standard sort

A parsed label becomes a ``SorterSpec``: a flat tuple of small integers that
both compute lanes (compiled and pure Python) interpret identically.
"""

from __future__ import annotations

from typing import NamedTuple

from . import networks as nw
from .errors import ConfigurationError
from .swaps import STRATEGIES

KIND_NETWORK, KIND_INSERTION, KIND_RSS, KIND_HYBRID, KIND_STD = range(5)

BASE_NETWORK = 0
BASE_INSERTION = 1

INS_VARIANTS = ("Def", "POp", "STL", "AIF")

DEFAULT_RSS_SAMPLE_SEED = 0x5EED
DEFAULT_BASE_THRESHOLD = 16
DEFAULT_DEPTH_FACTOR = 2

_TCOP = STRATEGIES.index("TCOp")


class SorterSpec(NamedTuple):
    """Flat, lane-independent description of one configured sorter."""

    kind: int
    family: int = 0          # network family code (index into FAMILY_KEYS)
    swap: int = 0            # swap strategy code (index into STRATEGIES)
    ins_variant: int = 0     # insertion variant code (index into INS_VARIANTS)
    base_kind: int = BASE_NETWORK   # base case for RSS/QS
    rss_oversampling: int = 3
    rss_block: int = 3
    rss_threshold: int = DEFAULT_BASE_THRESHOLD
    rss_sample_seed: int = DEFAULT_RSS_SAMPLE_SEED
    qs_base_is_rss: int = 0
    qs_threshold: int = DEFAULT_BASE_THRESHOLD
    qs_depth_factor: int = DEFAULT_DEPTH_FACTOR
    qs_final_pass: int = 0
    pivot_swap: int = _TCOP  # swap strategy for the 3-element pivot network


def spec_network(family_key: str, swap_name: str) -> SorterSpec:
    if family_key not in nw.FAMILY_KEYS:
        raise ConfigurationError(f"unknown network family: {family_key!r}")
    if swap_name not in STRATEGIES:
        raise ConfigurationError(f"unknown swap strategy: {swap_name!r}")
    swap = STRATEGIES.index(swap_name)
    return SorterSpec(
        kind=KIND_NETWORK,
        family=nw.FAMILY_KEYS.index(family_key),
        swap=swap,
        pivot_swap=swap,
    )


def spec_insertion(variant: str) -> SorterSpec:
    if variant not in INS_VARIANTS:
        raise ConfigurationError(f"unknown insertion variant: {variant!r}")
    return SorterSpec(
        kind=KIND_INSERTION,
        base_kind=BASE_INSERTION,
        ins_variant=INS_VARIANTS.index(variant),
    )


def _parse_rss_cfg(cfg: str) -> tuple[int, int]:
    if len(cfg) != 3 or not cfg.isdigit():
        raise ConfigurationError(f"RSS config must be three digits: {cfg!r}")
    x, y, z = (int(ch) for ch in cfg)
    if x != 3:
        raise ConfigurationError(f"RSS supports exactly 3 splitters, got {x}")
    if y < 1:
        raise ConfigurationError("RSS oversampling factor must be >= 1")
    if not 1 <= z <= 5:
        raise ConfigurationError(f"RSS block size must be in 1..5, got {z}")
    return y, z


def spec_rss(
    cfg: str,
    base: "SorterSpec | str" = "SN Best 4CmS",
    threshold: int = DEFAULT_BASE_THRESHOLD,
    sample_seed: int = DEFAULT_RSS_SAMPLE_SEED,
) -> SorterSpec:
    oversampling, block = _parse_rss_cfg(cfg)
    base_spec = parse_label(base) if isinstance(base, str) else base
    if base_spec.kind not in (KIND_NETWORK, KIND_INSERTION):
        raise ConfigurationError("RSS base case must be a small sorter (SN/IS)")
    if threshold < 2:
        raise ConfigurationError("RSS base threshold must be >= 2")
    if base_spec.kind == KIND_NETWORK and threshold > nw.MAX_UNROLLED:
        raise ConfigurationError(
            f"network base case caps the threshold at {nw.MAX_UNROLLED}"
        )
    return SorterSpec(
        kind=KIND_RSS,
        family=base_spec.family,
        swap=base_spec.swap,
        ins_variant=base_spec.ins_variant,
        base_kind=base_spec.base_kind,
        rss_oversampling=oversampling,
        rss_block=block,
        rss_threshold=threshold,
        rss_sample_seed=sample_seed,
        pivot_swap=base_spec.pivot_swap,
    )


def spec_hybrid(
    base: "SorterSpec | str" = "SN Best 4CmS",
    threshold: int = DEFAULT_BASE_THRESHOLD,
    depth_factor: int = DEFAULT_DEPTH_FACTOR,
    final_pass: bool = False,
) -> SorterSpec:
    base_spec = parse_label(base) if isinstance(base, str) else base
    if base_spec.kind not in (KIND_NETWORK, KIND_INSERTION, KIND_RSS):
        raise ConfigurationError("QS base case must be SN, IS, or RSS")
    if threshold < 2:
        raise ConfigurationError("QS base threshold must be >= 2")
    if base_spec.kind == KIND_NETWORK and threshold > nw.MAX_UNROLLED:
        raise ConfigurationError(
            f"network base case caps the threshold at {nw.MAX_UNROLLED}"
        )
    if depth_factor < 1:
        raise ConfigurationError("depth limit factor must be >= 1")
    return base_spec._replace(
        kind=KIND_HYBRID,
        qs_base_is_rss=1 if base_spec.kind == KIND_RSS else 0,
        qs_threshold=threshold,
        qs_depth_factor=depth_factor,
        qs_final_pass=1 if final_pass else 0,
    )


def spec_std() -> SorterSpec:
    return SorterSpec(kind=KIND_STD)


def parse_label(text: str) -> SorterSpec:
    tokens = text.split()
    if not tokens:
        raise ConfigurationError("empty sorter label")
    head = tokens[0]
    if head == "StdSort":
        if len(tokens) != 1:
            raise ConfigurationError(f"bad sorter label: {text!r}")
        return spec_std()
    if head == "SN":
        if len(tokens) != 3:
            raise ConfigurationError(f"bad network label: {text!r}")
        family_key = nw.LABEL_TO_FAMILY.get(tokens[1])
        if family_key is None:
            raise ConfigurationError(f"unknown network family: {tokens[1]!r}")
        return spec_network(family_key, tokens[2])
    if head == "IS":
        if len(tokens) != 2:
            raise ConfigurationError(f"bad insertion label: {text!r}")
        return spec_insertion(tokens[1])
    if head == "RSS":
        if len(tokens) < 3:
            raise ConfigurationError(f"bad RSS label: {text!r}")
        return spec_rss(tokens[1], " ".join(tokens[2:]))
    if head == "QS":
        if len(tokens) < 2:
            raise ConfigurationError(f"bad QS label: {text!r}")
        return spec_hybrid(" ".join(tokens[1:]))
    raise ConfigurationError(f"unknown sorter label: {text!r}")


def _small_label(spec: SorterSpec) -> str:
    if spec.base_kind == BASE_NETWORK:
        family_key = nw.FAMILY_KEYS[spec.family]
        return f"SN {nw.FAMILY_LABELS[family_key]} {STRATEGIES[spec.swap]}"
    return f"IS {INS_VARIANTS[spec.ins_variant]}"


def format_label(spec: SorterSpec) -> str:
    if spec.kind == KIND_STD:
        return "StdSort"
    if spec.kind in (KIND_NETWORK, KIND_INSERTION):
        return _small_label(spec)
    if spec.kind == KIND_RSS:
        cfg = f"3{spec.rss_oversampling}{spec.rss_block}"
        return f"RSS {cfg} {_small_label(spec)}"
    if spec.kind == KIND_HYBRID:
        if spec.qs_base_is_rss:
            cfg = f"3{spec.rss_oversampling}{spec.rss_block}"
            return f"QS RSS {cfg} {_small_label(spec)}"
        return f"QS {_small_label(spec)}"
    raise ConfigurationError(f"unknown sorter kind: {spec.kind}")


def resolve_sorters(text: str) -> list[tuple[str, SorterSpec]]:
    """Parse a comma-separated list of labels into (canonical label, spec)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        spec = parse_label(part)
        out.append((format_label(spec), spec))
    if not out:
        raise ConfigurationError("no sorters selected")
    return out

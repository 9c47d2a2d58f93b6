"""Writes schemas/*.schema.json. Shared definitions are inlined into each file."""

import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "schemas"

num = {"type": "number"}
integer = {"type": "integer"}
boolean = {"type": "boolean"}
string = {"type": "string"}


def arr(items, **kw):
    return {"type": "array", "items": items, **kw}


def obj(props, required=None, extra=False):
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": extra,
    }


DEFS = {
    "complex": obj({"re": num, "im": num}),
    "matrix": arr(arr({"$ref": "#/$defs/complex"}, minItems=1), minItems=1),
    "lattice": obj({"N": {"type": "integer", "minimum": 1}, "r": {"type": "integer", "minimum": 1}}),
    "entry": obj({"s": {"enum": [0, 1]}, "l": integer, "matrix": {"$ref": "#/$defs/matrix"}}),
    "entries": arr({"$ref": "#/$defs/entry"}),
    "matrix_seq": obj(
        {"lattice": {"$ref": "#/$defs/lattice"}, "n": {"type": "integer", "minimum": 1},
         "entries": {"$ref": "#/$defs/entries"}}),
    "spectrum_step": obj(
        {"lattice": {"$ref": "#/$defs/lattice"}, "n": {"type": "integer", "minimum": 1},
         "refinement": {"type": "integer", "minimum": 1, "maximum": 4096},
         "cells": arr({"$ref": "#/$defs/matrix"}, minItems=4)}),
    "signal": {"oneOf": [{"$ref": "#/$defs/matrix_seq"}, {"$ref": "#/$defs/spectrum_step"}]},
    "provenance": obj({
        "tool": {"const": "nuframe"},
        "version": string,
        "subcommand": string,
        "parameters": {"type": "object"},
        "tolerances": {"type": "object", "additionalProperties": num},
        "inputs": arr(obj({"path": string, "fnv1a64": {"type": "string", "pattern": "^[0-9a-f]{16}$"}})),
    }),
    "sup": obj({"value": num, "j_at_max": integer, "x_at_max": num, "grid": integer}),
}


def schema(title, body):
    s = {"$schema": "https://json-schema.org/draft/2020-12/schema", "title": title}
    s.update(body)
    s["$defs"] = DEFS
    return s


prov = {"$ref": "#/$defs/provenance"}
nullable_num = {"type": ["number", "null"]}

SCHEMAS = {
    "system": schema("nuframe system document", {
        "type": "object",
        "properties": {
            "lattice": {"$ref": "#/$defs/lattice"},
            "n": {"type": "integer", "minimum": 1},
            "envelopes": arr({"oneOf": [{"$ref": "#/$defs/entries"}, {"$ref": "#/$defs/matrix_seq"}]},
                             minItems=1),
            "envelopes_spectral": arr({"$ref": "#/$defs/spectrum_step"}, minItems=1),
            "companions": {"type": "object", "additionalProperties": {"$ref": "#/$defs/signal"}},
        },
        "required": ["lattice", "n"],
        "oneOf": [{"required": ["envelopes"]}, {"required": ["envelopes_spectral"]}],
        "additionalProperties": False,
    }),
    "info": schema("nuframe info report", obj({
        "lattice": {"$ref": "#/$defs/lattice"}, "n": integer, "p": integer,
        "form": {"enum": ["sequence", "step_spectrum"]}, "feasible": boolean,
        "rows_2p": integer, "columns_4Nn2": integer,
        "support_sizes": arr(integer), "refinements": arr(integer),
        "companions": arr(string), "provenance": prov,
    }, required=["lattice", "n", "p", "form", "feasible", "rows_2p", "columns_4Nn2", "companions",
                 "provenance"])),
    "fourier": schema("nuframe fourier report", obj({
        "x": num, "label": string, "value": {"$ref": "#/$defs/matrix"}, "frobenius_norm": num,
        "provenance": prov})),
    "bessel": schema("nuframe bessel report", obj({
        "envelope_sup": {"$ref": "#/$defs/sup"}, "sufficient_bound": nullable_num,
        "necessary": obj({"b0": num, "proof_constant": num, "stated_constant": num}),
        "provenance": prov,
    }, required=["envelope_sup", "sufficient_bound", "provenance"])),
    "gamma": schema("nuframe gamma report", obj({
        "x": num,
        "blocks": arr(obj({"m": integer, "k": integer, "gamma": {"$ref": "#/$defs/matrix"},
                           "gram": {"$ref": "#/$defs/matrix"}})),
        "singular_values": arr(num), "identity_residual": nullable_num, "provenance": prov})),
    "bounds": schema("nuframe bounds report", obj({
        "a_est": num, "b_est": num, "feasible": boolean,
        "verdict": {"enum": ["frame", "bessel_only", "rank_deficient"]},
        "grid": integer, "x_at_min": num, "x_at_max": num,
        "envelope_sup": {"$ref": "#/$defs/sup"},
        "levels": arr(obj({"grid": integer, "a_est": num, "b_est": num}), minItems=1),
        "curves": obj({"x": arr(num), "sigma_min_sq_over_4N": arr(num), "sigma_max_sq_over_4N": arr(num)}),
        "provenance": prov,
    }, required=["a_est", "b_est", "feasible", "verdict", "grid", "x_at_min", "x_at_max", "envelope_sup",
                 "levels", "provenance"])),
    "framesum": schema("nuframe framesum report", obj({
        "method": {"enum": ["exact_overlap", "coset_folding", "truncated"]},
        "tail_bound": num, "window": integer,
        "frame_sum": num, "signal_norm_squared": num, "ratio": nullable_num, "provenance": prov,
    }, required=["method", "frame_sum", "signal_norm_squared", "ratio", "provenance"])),
    "perturb": schema("nuframe perturb report", obj({
        "mode": {"enum": ["absolute", "relative"]}, "a0": num, "b0": num, "p": integer, "n": integer,
        "N": integer, "epsilon_measured": num, "j_at_max": integer, "x_at_max": num,
        "epsilon_per_envelope": arr(num), "condition_value": num, "condition_holds": boolean,
        "epsilon_below_condition": boolean, "new_lower": num, "new_upper": num, "grid": integer,
        "provenance": prov})),
}

if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    for name, s in SCHEMAS.items():
        (OUT / f"{name}.schema.json").write_text(json.dumps(s, indent=2) + "\n")

//! Built-in example documents, addressable as `builtin:<name>` wherever an
//! input file is expected. Each entry is an ordinary input document, so the
//! whole corpus round-trips through the schema layer.

use serde_json::{json, Value};

/// A named builtin input with the commands it is meant for.
pub struct Builtin {
    pub name: &'static str,
    pub commands: &'static [&'static str],
    pub doc: Value,
}

fn algebra_qz2() -> Value {
    json!({"kind": "group", "group": {"kind": "cyclic", "n": 2}})
}

fn algebra_qxq() -> Value {
    json!({"kind": "product", "factors": [{"kind": "field"}, {"kind": "field"}]})
}

fn gcw_rotation_circle() -> Value {
    json!({
        "group": {"kind": "cyclic", "n": 2},
        "cells": [
            {"dim": 0, "isotropy": ["e"], "id": "v"},
            {"dim": 1, "isotropy": ["e"], "id": "a"}
        ],
        "boundary": [
            {"from": "a", "to": "v", "morphisms": [
                {"coset": "g", "coeff": 1},
                {"coset": "e", "coeff": -1}
            ]}
        ]
    })
}

fn gcw_reflection_circle() -> Value {
    json!({
        "group": {"kind": "cyclic", "n": 2},
        "cells": [
            {"dim": 0, "isotropy": ["e", "g"], "id": "w0"},
            {"dim": 0, "isotropy": ["e", "g"], "id": "w1"},
            {"dim": 1, "isotropy": ["e"], "id": "a"}
        ],
        "boundary": [
            {"from": "a", "to": "w1", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "a", "to": "w0", "morphisms": [{"coset": "e", "coeff": -1}]}
        ]
    })
}

fn gcw_torus_z2() -> Value {
    json!({
        "group": {"kind": "cyclic", "n": 2},
        "cells": [
            {"dim": 0, "isotropy": ["e", "g"], "id": "P00"},
            {"dim": 0, "isotropy": ["e", "g"], "id": "P10"},
            {"dim": 0, "isotropy": ["e", "g"], "id": "P01"},
            {"dim": 0, "isotropy": ["e", "g"], "id": "P11"},
            {"dim": 1, "isotropy": ["e"], "id": "a"},
            {"dim": 1, "isotropy": ["e"], "id": "b"},
            {"dim": 1, "isotropy": ["e"], "id": "c"},
            {"dim": 1, "isotropy": ["e"], "id": "d"},
            {"dim": 2, "isotropy": ["e"], "id": "F"},
            {"dim": 2, "isotropy": ["e"], "id": "G"}
        ],
        "boundary": [
            {"from": "a", "to": "P10", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "a", "to": "P00", "morphisms": [{"coset": "e", "coeff": -1}]},
            {"from": "b", "to": "P11", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "b", "to": "P01", "morphisms": [{"coset": "e", "coeff": -1}]},
            {"from": "c", "to": "P01", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "c", "to": "P00", "morphisms": [{"coset": "e", "coeff": -1}]},
            {"from": "d", "to": "P11", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "d", "to": "P10", "morphisms": [{"coset": "e", "coeff": -1}]},
            {"from": "F", "to": "a", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "F", "to": "d", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "F", "to": "b", "morphisms": [{"coset": "e", "coeff": -1}]},
            {"from": "F", "to": "c", "morphisms": [{"coset": "e", "coeff": -1}]},
            {"from": "G", "to": "a", "morphisms": [{"coset": "g", "coeff": -1}]},
            {"from": "G", "to": "c", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "G", "to": "b", "morphisms": [{"coset": "g", "coeff": 1}]},
            {"from": "G", "to": "d", "morphisms": [{"coset": "e", "coeff": -1}]}
        ]
    })
}

fn gcw_reflection_half_arc(side: usize) -> Value {
    let fixed = if side == 0 { "w0" } else { "w1" };
    json!({
        "group": {"kind": "cyclic", "n": 2},
        "cells": [
            {"dim": 0, "isotropy": ["e", "g"], "id": fixed},
            {"dim": 0, "isotropy": ["e"], "id": "m"},
            {"dim": 1, "isotropy": ["e"], "id": "h"}
        ],
        "boundary": [
            {"from": "h", "to": "m", "morphisms": [{"coset": "e", "coeff": 1}]},
            {"from": "h", "to": fixed, "morphisms": [{"coset": "e", "coeff": -1}]}
        ]
    })
}

fn gcw_free_point_pair() -> Value {
    json!({
        "group": {"kind": "cyclic", "n": 2},
        "cells": [{"dim": 0, "isotropy": ["e"], "id": "p"}],
        "boundary": []
    })
}

/// The full builtin corpus.
pub fn builtins() -> Vec<Builtin> {
    vec![
        // Algebra-with-twist inputs for `hochschild` and `traces`.
        Builtin {
            name: "q",
            commands: &["hochschild", "traces"],
            doc: json!({"schema": 1, "algebra": {"kind": "field"}}),
        },
        Builtin {
            name: "qz2-id",
            commands: &["hochschild", "traces"],
            doc: json!({"schema": 1, "algebra": algebra_qz2()}),
        },
        Builtin {
            name: "qxq-swap",
            commands: &["hochschild", "traces"],
            doc: json!({"schema": 1, "algebra": algebra_qxq(), "twist": {"name": "swap"}}),
        },
        Builtin {
            name: "m2-conj",
            commands: &["hochschild", "traces"],
            doc: json!({
                "schema": 1,
                "algebra": {"kind": "matrix", "n": 2},
                "twist": {"name": "conjugation", "by": [[1, 0], [0, -1]]}
            }),
        },
        Builtin {
            name: "qx2-id",
            commands: &["hochschild", "traces"],
            doc: json!({"schema": 1, "algebra": {"kind": "truncated_poly", "n": 2}}),
        },
        Builtin {
            name: "qz3-inv",
            commands: &["hochschild", "traces"],
            doc: json!({
                "schema": 1,
                "algebra": {"kind": "group", "group": {"kind": "cyclic", "n": 3}},
                "twist": {"name": "inversion"}
            }),
        },
        // Orbifold evaluations.
        Builtin {
            name: "rotation-circle-q",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {"group": {"kind": "cyclic", "n": 2}, "action": "rotation"},
                "coefficients": {"algebra": {"kind": "field"}}
            }),
        },
        Builtin {
            name: "rotation-circle-qz2",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {"group": {"kind": "cyclic", "n": 2}, "action": "rotation"},
                "coefficients": {"algebra": algebra_qz2()}
            }),
        },
        Builtin {
            name: "rotation-circle-qxq-swap",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {"group": {"kind": "cyclic", "n": 2}, "action": "rotation"},
                "coefficients": {"algebra": algebra_qxq(), "twist": {"name": "swap"}}
            }),
        },
        Builtin {
            name: "rotation-circle-m2-conj",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {"group": {"kind": "cyclic", "n": 2}, "action": "rotation"},
                "coefficients": {
                    "algebra": {"kind": "matrix", "n": 2},
                    "twist": {"name": "conjugation", "by": [[1, 0], [0, -1]]}
                }
            }),
        },
        Builtin {
            name: "rotation-circle-qx2",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {"group": {"kind": "cyclic", "n": 2}, "action": "rotation"},
                "coefficients": {"algebra": {"kind": "truncated_poly", "n": 2}}
            }),
        },
        Builtin {
            name: "rotation-circle-z3-inv",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {"group": {"kind": "cyclic", "n": 3}, "action": "rotation"},
                "coefficients": {
                    "algebra": {"kind": "group", "group": {"kind": "cyclic", "n": 3}},
                    "twist": {"name": "inversion"}
                }
            }),
        },
        Builtin {
            name: "trivial-circle-qz2",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {"action": "trivial"},
                "coefficients": {"algebra": algebra_qz2()}
            }),
        },
        Builtin {
            name: "reflection-circle-q",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {
                    "group": {"kind": "cyclic", "n": 2},
                    "action": "reflection",
                    "colours": {"stratum_0": "c", "stratum_1": "c_star"}
                },
                "coefficients": {
                    "algebra": {"kind": "field"},
                    "twist": {"name": "identity"},
                    "modules": {"c": {"name": "regular"}, "c_star": {"name": "regular"}}
                }
            }),
        },
        Builtin {
            name: "reflection-circle-qz2-two-colours",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {
                    "group": {"kind": "cyclic", "n": 2},
                    "action": "reflection",
                    "colours": {"stratum_0": "c", "stratum_1": "c_star"}
                },
                "coefficients": {
                    "algebra": algebra_qz2(),
                    "twist": {"name": "inversion"},
                    "modules": {"c": {"name": "regular"}, "c_star": {"name": "trivial"}}
                }
            }),
        },
        Builtin {
            name: "two-rotation-circles-qz2",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": [
                    {"group": {"kind": "cyclic", "n": 2}, "action": "rotation"},
                    {"group": {"kind": "cyclic", "n": 2}, "action": "rotation"}
                ],
                "coefficients": {"algebra": algebra_qz2()}
            }),
        },
        Builtin {
            name: "free-interval-qz2",
            commands: &["facthom"],
            doc: json!({
                "schema": 1,
                "orbifold": {"action": "interval"},
                "coefficients": {"algebra": algebra_qz2()}
            }),
        },
        // Tor computations.
        Builtin {
            name: "tor-qx2-trivial",
            commands: &["tor"],
            doc: json!({
                "schema": 1,
                "algebra": {"kind": "truncated_poly", "n": 2},
                "left": {"name": "trivial"},
                "right": {"name": "trivial"}
            }),
        },
        Builtin {
            name: "tor-qz2-trivial",
            commands: &["tor"],
            doc: json!({
                "schema": 1,
                "algebra": algebra_qz2(),
                "left": {"name": "trivial"},
                "right": {"name": "trivial"}
            }),
        },
        // Equivariant CW inputs.
        Builtin {
            name: "rotation-circle-gcw",
            commands: &["bredon", "chenruan"],
            doc: json!({"schema": 1, "gcw": gcw_rotation_circle()}),
        },
        Builtin {
            name: "reflection-circle-gcw",
            commands: &["bredon", "chenruan"],
            doc: json!({"schema": 1, "gcw": gcw_reflection_circle()}),
        },
        Builtin {
            name: "torus-z2-rotation",
            commands: &["bredon", "chenruan"],
            doc: json!({"schema": 1, "gcw": gcw_torus_z2()}),
        },
        Builtin {
            name: "point-z2",
            commands: &["bredon", "chenruan"],
            doc: json!({
                "schema": 1,
                "gcw": {
                    "group": {"kind": "cyclic", "n": 2},
                    "cells": [{"dim": 0, "isotropy": ["e", "g"], "id": "pt"}],
                    "boundary": []
                }
            }),
        },
        Builtin {
            name: "orbit-s3-transposition",
            commands: &["bredon", "chenruan"],
            doc: json!({
                "schema": 1,
                "gcw": {
                    "group": {"kind": "symmetric", "n": 3},
                    "cells": [{"dim": 0, "isotropy": ["123", "213"], "id": "orbit"}],
                    "boundary": []
                }
            }),
        },
        Builtin {
            name: "bredon-reflection-circle-representable",
            commands: &["bredon"],
            doc: json!({
                "schema": 1,
                "gcw": gcw_reflection_circle(),
                "coefficients": {"system": "representable", "subgroup": ["e"]}
            }),
        },
        // Axiom checks.
        Builtin {
            name: "axioms-reflection-circle",
            commands: &["axioms"],
            doc: json!({
                "schema": 1,
                "gcw": gcw_reflection_circle(),
                "other": gcw_free_point_pair(),
                "decomposition": {
                    "plus": gcw_reflection_half_arc(0),
                    "minus": gcw_reflection_half_arc(1),
                    "zero": gcw_free_point_pair()
                }
            }),
        },
        Builtin {
            name: "axioms-torus",
            commands: &["axioms"],
            doc: json!({
                "schema": 1,
                "gcw": gcw_torus_z2(),
                "other": gcw_rotation_circle()
            }),
        },
    ]
}

pub fn lookup(name: &str) -> Option<Builtin> {
    builtins().into_iter().find(|b| b.name == name)
}

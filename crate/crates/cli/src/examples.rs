//! Named example documents, loaded with `@name`.

const S2: &str = r#"kind = "homogeneous"
G = "SU2"
H = "S1"

[embeddings.G_H]
source = "G"
target = "H"
kind = "maxtorus"
"#;

const S3: &str = r#"kind = "homogeneous"
G = "SU2"
H = "e"

[embeddings.G_H]
source = "G"
target = "H"
kind = "trivial"
"#;

const SU2XSU2_DIAG: &str = r#"kind = "homogeneous"
G = "SU2^2"
H = "SU2"

[embeddings.G_H]
source = "G"
target = "H"
kind = "diag"
"#;

const SU3_T2: &str = r#"kind = "homogeneous"
G = "SU3"
H = "T2"

[embeddings.G_H]
source = "G"
target = "H"
kind = "maxtorus"
"#;

const G2_SO4: &str = r#"kind = "homogeneous"
G = "G2"
H = "SO4"

[embeddings.G_H]
source = "G"
target = "H"
kind = "block"
"#;

const SU2XSU2: &str = r#"kind = "homogeneous"
G = "SU2^2"
H = "e"

[embeddings.G_H]
source = "G"
target = "H"
kind = "trivial"
"#;

// Sp(1) acting on Sp(2) on both sides; rationally a 7-sphere
const GROMOLL_MEYER: &str = r#"kind = "biquotient"
G = "Sp2"
H = "Sp1"

[embeddings.left]
source = "G"
target = "H"
map = { s1 = "2*p", s2 = "p^2" }

[embeddings.right]
source = "G"
target = "H"
map = { s1 = "p", s2 = "0" }
"#;

const CP2_CP2BAR: &str = r#"kind = "coho1"
G = "SU2"
H = "e"
Kminus = "T1"
Kplus = "T1"

[embeddings.G_Kminus]
source = "G"
target = "Kminus"
map = { p = "t1^2" }

[embeddings.G_Kplus]
source = "G"
target = "Kplus"
map = { p = "t1^2" }

[embeddings.Kminus_H]
source = "Kminus"
target = "H"
map = { t1 = "0" }

[embeddings.Kplus_H]
source = "Kplus"
target = "H"
map = { t1 = "0" }
"#;

const SU2CUBED_CIRCLES: &str = r#"kind = "coho1"
G = "SU2^3"
H = "e"
Kminus = "T1"
Kplus = "T1"

[embeddings.G_Kminus]
source = "G"
target = "Kminus"
kind = "diag"

[embeddings.G_Kplus]
source = "G"
target = "Kplus"
kind = "diag"

[embeddings.Kminus_H]
source = "Kminus"
target = "H"
map = { t1 = "0" }

[embeddings.Kplus_H]
source = "Kplus"
target = "H"
map = { t1 = "0" }
"#;

const S3_DIAGRAM: &str = r#"kind = "coho1"
G = "T2"
H = "e"
Kminus = "T1"
Kplus = "T1"

[embeddings.G_Kminus]
source = "G"
target = "Kminus"
map = { t1 = "t1", t2 = "0" }

[embeddings.G_Kplus]
source = "G"
target = "Kplus"
map = { t1 = "0", t2 = "t1" }

[embeddings.Kminus_H]
source = "Kminus"
target = "H"
map = { t1 = "0" }

[embeddings.Kplus_H]
source = "Kplus"
target = "H"
map = { t1 = "0" }
"#;

const S7_DIAGRAM: &str = r#"kind = "coho1"
G = "SU2^2"
H = "e"
Kminus = "SU2"
Kplus = "SU2"
assume_surjective = true

[embeddings.G_Kminus]
source = "G"
target = "Kminus"
kind = "factor1"

[embeddings.G_Kplus]
source = "G"
target = "Kplus"
kind = "factor2"
"#;

const S4_DIAGRAM: &str = r#"kind = "coho1"
G = "SU2"
H = "e"
Kminus = "SU2"
Kplus = "SU2"
assume_surjective = true

[embeddings.G_Kminus]
source = "G"
target = "Kminus"
map = { p = "p" }

[embeddings.G_Kplus]
source = "G"
target = "Kplus"
map = { p = "p" }
"#;

const S2_DIAGRAM: &str = r#"kind = "coho1"
G = "T1"
H = "e"
Kminus = "T1"
Kplus = "T1"
assume_surjective = true

[embeddings.G_Kminus]
source = "G"
target = "Kminus"
map = { t1 = "t1" }

[embeddings.G_Kplus]
source = "G"
target = "Kplus"
map = { t1 = "t1" }
"#;

const CP2_CP2BAR_MINIMAL: &str = r#"kind = "algebra"
generators = [
  { name = "x", degree = 2 },
  { name = "y", degree = 2 },
  { name = "m", degree = 3 },
  { name = "n", degree = 3 },
]
differential = { m = "x*y", n = "x^2+y^2" }
"#;

const HOPF: &str = r#"kind = "almost_free"
G = "S1"
X = { generators = [{ name = "z", degree = 3 }] }
action = { z = "t1^2" }
"#;

const S3XS3_T2: &str = r#"kind = "almost_free"
G = "T2"
X = { generators = [{ name = "u", degree = 3 }, { name = "v", degree = 3 }] }
action = { u = "t1^2", v = "t2^2" }
"#;

/// `(S²)^n × (ℂP² # -ℂP²)` as a cohomogeneity-one manifold of `SU2^(n+1)`.
fn m2n4(n: usize) -> String {
    let mut s = format!(
        "kind = \"coho1\"\nG = \"SU2^{}\"\nH = \"T{n}\"\nKminus = \"T{}\"\nKplus = \"T{}\"\n",
        n + 1,
        n + 1,
        n + 1
    );
    for k in ["Kminus", "Kplus"] {
        s += &format!(
            "\n[embeddings.G_{k}]\nsource = \"G\"\ntarget = \"{k}\"\nkind = \"maxtorus\"\n"
        );
    }
    let mut map = vec!["t1 = \"0\"".to_string()];
    map.extend((1..=n).map(|i| format!("t{} = \"t{i}\"", i + 1)));
    for k in ["Kminus", "Kplus"] {
        s += &format!(
            "\n[embeddings.{k}_H]\nsource = \"{k}\"\ntarget = \"H\"\nmap = {{ {} }}\n",
            map.join(", ")
        );
    }
    s
}

pub const NAMES: &[(&str, &str)] = &[
    ("s2", "SU2/S1"),
    ("s3", "SU2/e"),
    ("su2xsu2-diag", "SU2^2/ΔSU2"),
    ("su3-t2", "SU3/T2, the flag manifold"),
    ("g2-so4", "G2/SO4"),
    ("su2xsu2", "SU2^2/e, rank gap 2"),
    ("gromoll-meyer", "Sp1 acting on Sp2 on both sides"),
    (
        "cp2-cp2bar",
        "CP2 # -CP2 with SU2 acting with circle isotropy",
    ),
    ("m2n4-<n>", "(S2)^n x (CP2 # -CP2), SU2^(n+1) acting"),
    (
        "su2cubed-circles",
        "SU2^3 with diagonal circles, rank gap 2",
    ),
    ("s3-diagram", "S3 with T2 acting"),
    ("s7-diagram", "S7 with SU2^2 acting"),
    ("s4-diagram", "S4 with SU2 acting"),
    ("s2-diagram", "S2 with a circle acting"),
    ("cp2-cp2bar-minimal", "minimal model of CP2 # -CP2"),
    ("hopf", "S3 with the free circle action"),
    ("s3xs3-t2", "S3 x S3 with T2 acting"),
];

pub fn text(name: &str) -> Option<String> {
    if let Some(n) = name.strip_prefix("m2n4-") {
        let n: usize = n.parse().ok()?;
        return (n >= 1).then(|| m2n4(n));
    }
    let t = match name {
        "s2" => S2,
        "s3" => S3,
        "su2xsu2-diag" => SU2XSU2_DIAG,
        "su3-t2" => SU3_T2,
        "g2-so4" => G2_SO4,
        "su2xsu2" => SU2XSU2,
        "gromoll-meyer" => GROMOLL_MEYER,
        "cp2-cp2bar" => CP2_CP2BAR,
        "su2cubed-circles" => SU2CUBED_CIRCLES,
        "s3-diagram" => S3_DIAGRAM,
        "s7-diagram" => S7_DIAGRAM,
        "s4-diagram" => S4_DIAGRAM,
        "s2-diagram" => S2_DIAGRAM,
        "cp2-cp2bar-minimal" => CP2_CP2BAR_MINIMAL,
        "hopf" => HOPF,
        "s3xs3-t2" => S3XS3_T2,
        _ => return None,
    };
    Some(t.to_string())
}

/// Every example name, with `m2n4-<n>` instantiated for `n = 1, 2`.
pub fn all() -> Vec<String> {
    NAMES
        .iter()
        .flat_map(|(n, _)| {
            if *n == "m2n4-<n>" {
                vec!["m2n4-1".to_string(), "m2n4-2".to_string()]
            } else {
                vec![n.to_string()]
            }
        })
        .collect()
}

//! The builtin corpus of G-groups and loading of G-group descriptions.

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ggroup::GGroup;
use crate::group::io::GroupDescription;
use crate::group::{direct_product, is_simple, is_solvable, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::limits::Limits;

/// Ambient groups available as `builtin:NAME` inside description files.
pub const AMBIENT_NAMES: &[&str] =
    &["Z1", "Z2", "Z4", "Z6", "S3", "D4", "Q8", "A4", "S4", "A5", "S5", "A5xZ2", "A5xA5", "PSL27"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Tags {
    /// `G` is solvable (the trivial group included).
    pub solvable: bool,
    pub simple: bool,
    pub trivial_g: bool,
    pub domain: bool,
}

impl Tags {
    /// Recomputes every tag from the G-group.
    pub fn derive(gg: &GGroup) -> Tags {
        Tags {
            solvable: is_solvable(gg.base()),
            simple: is_simple(gg.base()),
            trivial_g: gg.base().order() == 1,
            domain: gg.is_g_domain(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Structure {
    Itself,
    Trivial,
    /// The subgroup generated by the transposition `(0 1)`.
    Transposition,
    /// `A5` inside `S5` as the even permutations.
    Alternating,
    FirstFactor,
    Diagonal,
}

struct Spec {
    name: &'static str,
    ambient: &'static str,
    structure: Structure,
    tags: Tags,
}

const fn tags(solvable: bool, simple: bool, trivial_g: bool, domain: bool) -> Tags {
    Tags { solvable, simple, trivial_g, domain }
}

const SOLVABLE: Tags = tags(true, false, false, false);
const TRIVIAL: Tags = tags(true, false, true, false);

const fn entry(name: &'static str, ambient: &'static str, structure: Structure, tags: Tags) -> Spec {
    Spec { name, ambient, structure, tags }
}

const ENTRIES: &[Spec] = &[
    entry("Z1/Z1", "Z1", Structure::Itself, tags(true, false, true, true)),
    entry("Z2/Z2", "Z2", Structure::Itself, tags(true, true, false, false)),
    entry("Z4/Z4", "Z4", Structure::Itself, SOLVABLE),
    entry("Z6/Z6", "Z6", Structure::Itself, SOLVABLE),
    entry("S3/S3", "S3", Structure::Itself, SOLVABLE),
    entry("S3/Z2", "S3", Structure::Transposition, tags(true, true, false, false)),
    entry("D4/D4", "D4", Structure::Itself, SOLVABLE),
    entry("Q8/Q8", "Q8", Structure::Itself, SOLVABLE),
    entry("A4/A4", "A4", Structure::Itself, SOLVABLE),
    entry("S4/S4", "S4", Structure::Itself, SOLVABLE),
    entry("A5/A5", "A5", Structure::Itself, tags(false, true, false, true)),
    entry("S5/A5", "S5", Structure::Alternating, tags(false, true, false, true)),
    entry("A5xZ2/A5", "A5xZ2", Structure::FirstFactor, tags(false, true, false, false)),
    entry("A5xA5/first", "A5xA5", Structure::FirstFactor, tags(false, true, false, false)),
    entry("A5xA5/diag", "A5xA5", Structure::Diagonal, tags(false, true, false, false)),
    entry("PSL27/PSL27", "PSL27", Structure::Itself, tags(false, true, false, true)),
    entry("Z2/1", "Z2", Structure::Trivial, TRIVIAL),
    entry("Z4/1", "Z4", Structure::Trivial, TRIVIAL),
    entry("Z6/1", "Z6", Structure::Trivial, TRIVIAL),
    entry("S3/1", "S3", Structure::Trivial, TRIVIAL),
    entry("D4/1", "D4", Structure::Trivial, TRIVIAL),
    entry("Q8/1", "Q8", Structure::Trivial, TRIVIAL),
    entry("A4/1", "A4", Structure::Trivial, TRIVIAL),
    entry("S4/1", "S4", Structure::Trivial, TRIVIAL),
    entry("A5/1", "A5", Structure::Trivial, TRIVIAL),
    entry("S5/1", "S5", Structure::Trivial, TRIVIAL),
    entry("A5xZ2/1", "A5xZ2", Structure::Trivial, TRIVIAL),
    entry("A5xA5/1", "A5xA5", Structure::Trivial, TRIVIAL),
    entry("PSL27/1", "PSL27", Structure::Trivial, TRIVIAL),
];

/// A named G-group of the builtin corpus with its stored tags.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub ggroup: Arc<GGroup>,
    pub tags: Tags,
}

impl CorpusEntry {
    /// Whether the stored tags agree with freshly derived ones.
    pub fn tags_consistent(&self) -> bool {
        Tags::derive(&self.ggroup) == self.tags
    }
}

pub fn builtin_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

fn build_ambient(name: &str) -> Result<FiniteGroup> {
    let perm = |name: &str, degree, gens: &[&[usize]]| {
        let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
        FiniteGroup::from_permutations(name, degree, &gens, DEFAULT_ORDER_CAP)
    };
    match name {
        "Z1" => Ok(FiniteGroup::trivial()),
        "Z2" => FiniteGroup::cyclic(2),
        "Z4" => FiniteGroup::cyclic(4),
        "Z6" => FiniteGroup::cyclic(6),
        "S3" => FiniteGroup::symmetric(3),
        "S4" => FiniteGroup::symmetric(4),
        "S5" => FiniteGroup::symmetric(5),
        "A4" => FiniteGroup::alternating(4),
        "A5" => FiniteGroup::alternating(5),
        "D4" => perm("D4", 4, &[&[1, 2, 3, 0], &[3, 2, 1, 0]]),
        // i = (0 1 2 3)(4 5 6 7), j = (0 4 2 6)(1 7 3 5)
        "Q8" => perm("Q8", 8, &[&[1, 2, 3, 0, 5, 6, 7, 4], &[4, 7, 6, 5, 2, 1, 0, 3]]),
        // projective line over F7 with 7 = ∞: i ↦ i+1 and i ↦ −1/i
        "PSL27" => perm("PSL27", 8, &[&[1, 2, 3, 4, 5, 6, 0, 7], &[7, 6, 3, 2, 5, 4, 1, 0]]),
        "A5xZ2" => direct_product(&*builtin_group("A5")?, &*builtin_group("Z2")?, DEFAULT_ORDER_CAP),
        "A5xA5" => {
            let a5 = builtin_group("A5")?;
            direct_product(&a5, &a5, DEFAULT_ORDER_CAP)
        }
        other => Err(Error::Input(format!("unknown builtin group `{other}`"))),
    }
}

/// A builtin ambient group; repeated calls return the same `Arc`.
pub fn builtin_group(name: &str) -> Result<Arc<FiniteGroup>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<FiniteGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().expect("group cache").get(name) {
        return Ok(g.clone());
    }
    // built outside the lock: products look up their factors
    let g = Arc::new(build_ambient(name)?);
    Ok(cache.lock().expect("group cache").entry(name.to_string()).or_insert(g).clone())
}

fn construct(spec: &Spec) -> Result<GGroup> {
    let h = builtin_group(spec.ambient)?;
    let gg = match spec.structure {
        Structure::Itself => GGroup::over_itself(&h),
        Structure::Trivial => GGroup::over_trivial(&h),
        Structure::Transposition => {
            let t = h.find_perm(&[1, 0, 2]).ok_or_else(|| Error::Internal("transposition missing".into()))?;
            GGroup::generated_by(spec.name, &h, &[t])?
        }
        Structure::Alternating => {
            let a5 = builtin_group("A5")?;
            let emb = a5
                .elements()
                .map(|a| {
                    let p = a5.perm(a).expect("A5 is a permutation group");
                    h.find_perm(p).ok_or_else(|| Error::Internal("A5 element missing from S5".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            GGroup::new(spec.name, a5, h, emb)?
        }
        Structure::FirstFactor | Structure::Diagonal => {
            let a5 = builtin_group("A5")?;
            let nb = h.order() / a5.order();
            let step = match spec.structure {
                Structure::Diagonal => nb + 1,
                _ => nb,
            };
            let emb = a5.elements().map(|a| a * step).collect();
            GGroup::new(spec.name, a5, h, emb)?
        }
    };
    Ok(gg.with_label(spec.name))
}

/// The builtin entry `name`, e.g. `S5/A5` or `A5xA5/first`.
pub fn builtin(name: &str) -> Result<CorpusEntry> {
    let spec = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Input(format!("unknown builtin `{name}`; available: {}", builtin_names().join(", "))))?;
    Ok(CorpusEntry { name: spec.name.to_string(), ggroup: Arc::new(construct(spec)?), tags: spec.tags })
}

/// Every builtin entry, in table order.
pub fn default_corpus() -> Result<Vec<CorpusEntry>> {
    ENTRIES.iter().map(|e| builtin(e.name)).collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GGroupFile {
    format: String,
    #[serde(default)]
    name: Option<String>,
    ambient: serde_json::Value,
    g: GeneratorList,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorList {
    generators: Vec<usize>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn group_from_value(value: &serde_json::Value, dir: &Path, limits: &Limits) -> Result<Arc<FiniteGroup>> {
    match value {
        serde_json::Value::String(s) => match s.strip_prefix("builtin:") {
            Some(name) => builtin_group(name),
            None => {
                let path = dir.join(s);
                let desc = GroupDescription::parse(&read(&path)?)
                    .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
                Ok(Arc::new(desc.build(limits.order_cap)?))
            }
        },
        serde_json::Value::Object(_) => {
            let desc: GroupDescription =
                serde_json::from_value(value.clone()).map_err(|e| Error::Input(format!("ambient group: {e}")))?;
            Ok(Arc::new(desc.build(limits.order_cap)?))
        }
        _ => Err(Error::Input("`ambient` must be a group object, a path or \"builtin:NAME\"".into())),
    }
}

/// Parses the text of a description file. Relative ambient paths are read
/// from `dir`.
pub fn parse_description(text: &str, dir: &Path, default_label: &str, limits: &Limits) -> Result<GGroup> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))?;
    let format = value.get("format").and_then(|f| f.as_str()).unwrap_or_default();
    match format {
        "ggroup-v1" => {
            let file: GGroupFile =
                serde_json::from_value(value).map_err(|e| Error::Input(format!("ggroup-v1: {e}")))?;
            debug_assert_eq!(file.format, "ggroup-v1");
            let h = group_from_value(&file.ambient, dir, limits)?;
            let label = file.name.unwrap_or_else(|| default_label.to_string());
            Ok(GGroup::generated_by(label, &h, &file.g.generators)?.with_limits(*limits))
        }
        "cayley-v1" | "perm-v1" => {
            let h = Arc::new(GroupDescription::parse(text)?.build(limits.order_cap)?);
            Ok(GGroup::over_trivial(&h).with_limits(*limits))
        }
        other => Err(Error::Input(format!("unsupported format `{other}`"))),
    }
}

/// Loads `builtin:NAME` or a `ggroup-v1`, `cayley-v1` or `perm-v1` file.
/// A bare group file is read as a group over the trivial group.
pub fn load(source: &str, limits: &Limits) -> Result<Arc<GGroup>> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let gg = Arc::try_unwrap(builtin(name)?.ggroup).expect("fresh entry");
        return Ok(Arc::new(gg.with_limits(*limits)));
    }
    let path = Path::new(source);
    let text = read(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(source);
    parse_description(&text, dir, stem, limits).map(Arc::new).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{source}: {m}")),
        other => other,
    })
}

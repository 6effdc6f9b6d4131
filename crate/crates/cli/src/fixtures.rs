//! Reference data for m = 5, 7, 9. Embedded at build time; the directory
//! named by `TRITCODES_FIXTURES` takes precedence when set.

use std::path::PathBuf;

use anyhow::{Context, Result};
use tritcodes::{TernaryPoly, WeightEnumerator};

pub const FIXTURES_ENV: &str = "TRITCODES_FIXTURES";

const EMBEDDED: [(u32, &str); 3] = [
    (5, include_str!("../fixtures/m5.json")),
    (7, include_str!("../fixtures/m7.json")),
    (9, include_str!("../fixtures/m9.json")),
];

#[derive(Debug, Clone)]
pub struct Fixture {
    pub modulus: TernaryPoly,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub generator: TernaryPoly,
    pub dual_enumerator: WeightEnumerator,
}

fn parse(text: &str) -> Result<Fixture> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    let field = |name: &str| v.get(name).with_context(|| format!("fixture lacks {name:?}"));
    let poly = |name: &str| -> Result<TernaryPoly> {
        let s = field(name)?.as_str().with_context(|| format!("{name:?} is not a string"))?;
        Ok(s.parse()?)
    };
    let int = |name: &str| -> Result<usize> {
        Ok(field(name)?.as_u64().with_context(|| format!("{name:?} is not an integer"))? as usize)
    };
    Ok(Fixture {
        modulus: poly("modulus")?,
        n: int("n")?,
        k: int("k")?,
        d: int("d")?,
        generator: poly("generator")?,
        dual_enumerator: WeightEnumerator::from_json_value(field("dual_enumerator")?)?,
    })
}

/// Fixture for `m`, if one exists.
pub fn load(m: u32) -> Result<Option<Fixture>> {
    if let Some(dir) = std::env::var_os(FIXTURES_ENV) {
        let path = PathBuf::from(dir).join(format!("m{m}.json"));
        if !path.exists() {
            return Ok(None);
        }
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()))?;
        return parse(&text).map(Some).with_context(|| format!("parsing {}", path.display()));
    }
    EMBEDDED
        .iter()
        .find(|(fm, _)| *fm == m)
        .map(|(_, text)| parse(text))
        .transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        for (m, text) in EMBEDDED {
            let f = parse(text).unwrap();
            assert_eq!(f.n, 3usize.pow(m) - 1);
            assert_eq!(f.k, f.n - 2 * m as usize);
            assert_eq!(f.generator.degree(), Some(2 * m as usize));
            assert_eq!(f.dual_enumerator.total().to_string(), 3u64.pow(2 * m).to_string());
        }
    }
}

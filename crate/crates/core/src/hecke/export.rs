//! On-disk forms of canonical-basis tables: a JSON schema shared by table
//! exports and the persistent cache, plus a CSV rendering.

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::exactmath::LaurentPoly;
use crate::hecke::canonical::CanonicalCache;
use crate::hecke::elt::HeckeElt;

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct TermEntry {
    y: Vec<u8>,
    poly: LaurentPoly,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableEntry {
    w: Vec<u8>,
    terms: Vec<TermEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableFile {
    group: String,
    entries: Vec<TableEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    group: String,
    entries: Vec<TableEntry>,
}

fn entries_of(cache: &CanonicalCache) -> Vec<TableEntry> {
    cache
        .sorted_entries()
        .into_iter()
        .map(|(w, c)| TableEntry {
            w: w.word().to_vec(),
            terms: c
                .terms()
                .map(|(y, p)| TermEntry { y: y.word().to_vec(), poly: p.clone() })
                .collect(),
        })
        .collect()
}

/// Basis table as JSON: `{"group": fp, "entries": [{"w": [...], "terms":
/// [{"y": [...], "poly": {...}}]}]}` sorted by (length, word).
pub fn table_to_json(cache: &CanonicalCache) -> String {
    let file = TableFile {
        group: cache.fingerprint().to_string(),
        entries: entries_of(cache),
    };
    serde_json::to_string_pretty(&file).expect("table serialization cannot fail")
}

/// Versioned cache file; same entry schema as the table export.
pub fn cache_to_json(cache: &CanonicalCache) -> String {
    let file = CacheFile {
        version: CACHE_VERSION,
        group: cache.fingerprint().to_string(),
        entries: entries_of(cache),
    };
    serde_json::to_string_pretty(&file).expect("cache serialization cannot fail")
}

/// Parse and fully re-verify a cache (or table) file against a group.
///
/// Rejects unknown schema versions and fingerprint mismatches, and re-checks
/// every entry against the canonical-basis conditions, so a corrupted file is
/// an error rather than a silently wrong table. Table exports (no version
/// field) are accepted as caches.
pub fn cache_from_json<G: CoxeterGroup>(
    group: &G,
    expected_fingerprint: &str,
    json: &str,
) -> Result<CanonicalCache> {
    let parsed: serde_json::Value = serde_json::from_str(json).map_err(|e| Error::CacheMismatch {
        detail: format!("unparseable cache file: {e}"),
    })?;
    if let Some(v) = parsed.get("version") {
        if v.as_u64() != Some(u64::from(CACHE_VERSION)) {
            return Err(Error::CacheMismatch {
                detail: format!("unknown cache schema version {v}"),
            });
        }
    }
    let file: TableFile =
        serde_json::from_value(parsed).map_err(|e| Error::CacheMismatch {
            detail: format!("malformed cache file: {e}"),
        })?;
    if file.group != expected_fingerprint {
        return Err(Error::CacheMismatch {
            detail: format!(
                "cache was computed for group {} but this group is {}",
                file.group, expected_fingerprint
            ),
        });
    }
    let mut cache = CanonicalCache::new(expected_fingerprint);
    for entry in file.entries {
        let w = group.normalize_word(&entry.w).map_err(|e| Error::CacheMismatch {
            detail: format!("bad word in cache entry: {e}"),
        })?;
        if w.word() != entry.w.as_slice() {
            return Err(Error::CacheMismatch {
                detail: format!("cache entry word {:?} is not canonical", entry.w),
            });
        }
        let mut c = HeckeElt::zero();
        for term in entry.terms {
            let y = group.normalize_word(&term.y).map_err(|e| Error::CacheMismatch {
                detail: format!("bad word in cache entry: {e}"),
            })?;
            if y.word() != term.y.as_slice() {
                return Err(Error::CacheMismatch {
                    detail: format!("cache term word {:?} is not canonical", term.y),
                });
            }
            c.add_term(y, term.poly);
        }
        verify_cached_entry(group, &w, &c)?;
        cache.insert(w, c);
    }
    Ok(cache)
}

/// The canonical-basis conditions as a cache-integrity check.
fn verify_cached_entry<G: CoxeterGroup>(
    group: &G,
    w: &crate::coxeter::Element,
    c: &HeckeElt,
) -> Result<()> {
    let fail = |detail: String| Error::CacheMismatch { detail };
    if !c.coeff(w).is_one() {
        return Err(fail(format!("entry {w} lacks a unit top coefficient")));
    }
    for (y, p) in c.terms() {
        if y == w {
            continue;
        }
        if !p.in_v_zv() {
            return Err(fail(format!("entry {w}: coefficient at {y} escapes vZ[v]")));
        }
        if !crate::coxeter::bruhat_leq(group, y, w)? {
            return Err(fail(format!("entry {w}: support {y} not below {w}")));
        }
    }
    if c.bar(group)? != *c {
        return Err(fail(format!("entry {w} is not bar-invariant")));
    }
    Ok(())
}

fn render_word(word: &[u8], names: Option<&[String]>) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|&s| match names {
            Some(names) => names[s as usize].clone(),
            None => format!("s{}", s + 1),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// One row per (w, y) pair, polynomials rendered like `v^-1 + 2 + v^3`.
pub fn table_to_csv(cache: &CanonicalCache, names: Option<&[String]>) -> String {
    let mut out = String::from("w,y,poly\n");
    for (w, c) in cache.sorted_entries() {
        for (y, p) in c.terms() {
            out.push_str(&format!(
                "{},{},{}\n",
                render_word(w.word(), names),
                render_word(y.word(), names),
                p
            ));
        }
    }
    out
}

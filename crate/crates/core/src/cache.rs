//! Optional on-disk store for Jack expansions. Files that fail to parse or
//! carry another version tag are ignored and rewritten.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::sync::LazyLock;

use jlk_algebra::{parse_ratfunc, ratfunc_to_text, Alpha, RatFunc1};
use parking_lot::{Mutex, RwLock};

use crate::partition::Partition;

const HEADER: &str = "jlk-jack-p v1";

static DIR: LazyLock<RwLock<Option<PathBuf>>> = LazyLock::new(Default::default);
static WRITE_LOCK: Mutex<()> = Mutex::new(());

/// Sets or clears the cache directory for this process.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *DIR.write() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    DIR.read().clone()
}

fn path_for(lambda: &Partition, n: usize) -> Option<PathBuf> {
    let dir = DIR.read().clone()?;
    let name = if lambda.is_empty() {
        "empty".to_string()
    } else {
        lambda.to_string().replace(',', "_")
    };
    Some(dir.join(format!("P_{name}_n{n}.txt")))
}

pub(crate) fn load_jack(
    lambda: &Partition,
    n: usize,
) -> Option<BTreeMap<Partition, RatFunc1<Alpha>>> {
    let text = fs::read_to_string(path_for(lambda, n)?).ok()?;
    let mut lines = text.lines();
    if lines.next()? != HEADER {
        return None;
    }
    let mut out = BTreeMap::new();
    for line in lines {
        let (k, v) = line.split_once('\t')?;
        let k: Partition = k.parse().ok()?;
        if k.weight() != lambda.weight() {
            return None;
        }
        out.insert(k, parse_ratfunc::<Alpha>(v).ok()?);
    }
    // the leading coefficient is always present and equal to 1
    if !out.get(lambda)?.is_one() {
        return None;
    }
    Some(out)
}

pub(crate) fn store_jack(lambda: &Partition, n: usize, v: &BTreeMap<Partition, RatFunc1<Alpha>>) {
    let Some(path) = path_for(lambda, n) else {
        return;
    };
    let mut text = String::from(HEADER);
    for (k, c) in v {
        text.push('\n');
        text.push_str(&format!("{k}\t{}", ratfunc_to_text(c)));
    }
    let _guard = WRITE_LOCK.lock();
    if fs::create_dir_all(path.parent().unwrap()).is_err() {
        return;
    }
    let tmp = path.with_extension("tmp");
    if fs::write(&tmp, text).is_ok() {
        let _ = fs::rename(&tmp, &path);
    }
}

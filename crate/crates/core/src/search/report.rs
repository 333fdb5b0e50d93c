//! Plain-text report and checkpoint files.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{Counters, Hit, ScreenMode, SearchError, SearchParams, SearchReport};
use crate::trace::trace_poly;
use crate::words::BlockList;

const CHECKPOINT_MAGIC: &str = "gtg-search-checkpoint 1";

fn counters_text(k: &Counters) -> String {
    format!(
        "raw={} canonical={} screened_out={} exact_checked={}",
        k.raw, k.canonical, k.screened_out, k.exact_checked
    )
}

impl Hit {
    /// `c,e,[blocks],word,[τ coefficients]`.
    pub fn line(&self, c: u32, e: u32) -> String {
        format!(
            "{c},{e},{},{},{}",
            self.blocks,
            self.word,
            self.tau.to_list_string()
        )
    }

    fn from_blocks(blocks: BlockList) -> Result<Hit, String> {
        let word = blocks.to_word().map_err(|e| e.to_string())?;
        let tau = trace_poly(&word).map_err(|e| e.to_string())?;
        Ok(Hit { blocks, word, tau })
    }
}

impl SearchReport {
    pub fn header(&self) -> String {
        format!(
            "# search c={} e={} ell={} screen={} workers={} {} hits={}",
            self.c,
            self.e,
            self.ell(),
            self.screen,
            self.workers,
            counters_text(&self.counters),
            self.hits.len()
        ) + if self.complete { "" } else { " partial" }
    }

    pub fn timing_line(&self) -> String {
        format!("# wall_time={:.3}s", self.wall_time.as_secs_f64())
    }

    /// Header, optional timing line, then one line per hit.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = self.header();
        out.push('\n');
        if timing {
            out.push_str(&self.timing_line());
            out.push('\n');
        }
        for h in &self.hits {
            out.push_str(&h.line(self.c, self.e));
            out.push('\n');
        }
        out
    }
}

/// Search state after a completed prefix `0..next_l` of the `L` stream.
#[derive(Clone, Debug, PartialEq)]
pub struct Checkpoint {
    pub c: u32,
    pub e: u32,
    pub screen: ScreenMode,
    pub tolerance: f64,
    pub next_l: u64,
    pub counters: Counters,
    pub hits: Vec<Hit>,
}

impl Checkpoint {
    pub(crate) fn from_progress(
        params: &SearchParams,
        next_l: u64,
        report: &SearchReport,
    ) -> Checkpoint {
        Checkpoint {
            c: params.c,
            e: params.e,
            screen: params.screen,
            tolerance: params.tolerance,
            next_l,
            counters: report.counters,
            hits: report.hits.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{CHECKPOINT_MAGIC}").unwrap();
        writeln!(
            out,
            "params c={} e={} screen={} tolerance={:e}",
            self.c, self.e, self.screen, self.tolerance
        )
        .unwrap();
        writeln!(out, "next_l {}", self.next_l).unwrap();
        writeln!(out, "counters {}", counters_text(&self.counters)).unwrap();
        for h in &self.hits {
            writeln!(out, "hit {}", h.blocks).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Checkpoint, String> {
        let mut lines = text.lines();
        if lines.next() != Some(CHECKPOINT_MAGIC) {
            return Err("not a checkpoint file".into());
        }
        let fields = |line: Option<&str>, tag: &str| -> Result<Vec<(String, String)>, String> {
            let rest = line
                .and_then(|l| l.strip_prefix(tag))
                .ok_or_else(|| format!("missing '{tag}' line"))?;
            rest.split_whitespace()
                .map(|kv| {
                    kv.split_once('=')
                        .map(|(k, v)| (k.to_string(), v.to_string()))
                        .ok_or_else(|| format!("bad field '{kv}'"))
                })
                .collect()
        };
        let get = |fs: &[(String, String)], key: &str| -> Result<String, String> {
            fs.iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| format!("missing field '{key}'"))
        };
        let num = |s: String| s.parse::<u64>().map_err(|e| format!("{s}: {e}"));

        let p = fields(lines.next(), "params ")?;
        let c = num(get(&p, "c")?)? as u32;
        let e = num(get(&p, "e")?)? as u32;
        let screen = get(&p, "screen")?.parse()?;
        let tolerance = get(&p, "tolerance")?
            .parse::<f64>()
            .map_err(|e| e.to_string())?;
        let next_l = lines
            .next()
            .and_then(|l| l.strip_prefix("next_l "))
            .ok_or("missing 'next_l' line")?
            .trim()
            .parse::<u64>()
            .map_err(|e| e.to_string())?;
        let k = fields(lines.next(), "counters ")?;
        let counters = Counters {
            raw: num(get(&k, "raw")?)?,
            canonical: num(get(&k, "canonical")?)?,
            screened_out: num(get(&k, "screened_out")?)?,
            exact_checked: num(get(&k, "exact_checked")?)?,
        };
        let hits = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let b = l
                    .strip_prefix("hit ")
                    .ok_or_else(|| format!("bad line '{l}'"))?;
                let blocks: BlockList = b
                    .parse()
                    .map_err(|e: crate::words::WordError| e.to_string())?;
                Hit::from_blocks(blocks)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Checkpoint {
            c,
            e,
            screen,
            tolerance,
            next_l,
            counters,
            hits,
        })
    }

    /// `None` if `path` does not exist yet.
    pub fn load(path: &Path) -> Result<Option<Checkpoint>, SearchError> {
        let err = |message: String| SearchError::Checkpoint {
            path: path.to_path_buf(),
            message,
        };
        match fs::read_to_string(path) {
            Ok(text) => Checkpoint::parse(&text).map(Some).map_err(err),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(err(e.to_string())),
        }
    }

    /// Writes via a temporary file and rename, so a crash never leaves a
    /// truncated checkpoint.
    pub fn save(&self, path: &Path) -> Result<(), SearchError> {
        let err = |e: std::io::Error| SearchError::Checkpoint {
            path: path.to_path_buf(),
            message: e.to_string(),
        };
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        fs::write(&tmp, self.to_text()).map_err(err)?;
        fs::rename(&tmp, path).map_err(err)
    }

    pub(crate) fn check_matches(
        &self,
        path: &Path,
        params: &SearchParams,
    ) -> Result<(), SearchError> {
        if (self.c, self.e, self.screen) != (params.c, params.e, params.screen)
            || self.tolerance != params.tolerance
        {
            return Err(SearchError::Checkpoint {
                path: path.to_path_buf(),
                message: format!(
                    "written for c={} e={} screen={} tolerance={:e}, not for this search",
                    self.c, self.e, self.screen, self.tolerance
                ),
            });
        }
        Ok(())
    }
}

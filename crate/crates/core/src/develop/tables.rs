//! Base-block tables embedded from `data/tables`.
//!
//! Each table is a base-block text file; `data/tables/SHA256SUMS` pins
//! their contents and every load is checked against it.

use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use super::{io, BaseBlockSet};
use crate::error::{Error, Result};

/// Which graph degree a table belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Cycle graphs, blocks of size 3.
    Delta2,
    /// Cubic graphs, blocks of size 4.
    Delta3,
    /// 4-regular graphs, blocks of size 5.
    Delta4,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Delta2, Family::Delta3, Family::Delta4];

    pub fn degree(self) -> usize {
        match self {
            Family::Delta2 => 2,
            Family::Delta3 => 3,
            Family::Delta4 => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "delta{}", self.degree())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta2" | "2" => Ok(Family::Delta2),
            "delta3" | "3" => Ok(Family::Delta3),
            "delta4" | "4" => Ok(Family::Delta4),
            other => Err(Error::InvalidParameter(format!("unknown table family `{other}`"))),
        }
    }
}

struct Asset {
    family: Family,
    order: usize,
    path: &'static str,
    text: &'static str,
}

macro_rules! asset {
    ($family:ident, $order:expr, $path:literal) => {
        Asset {
            family: Family::$family,
            order: $order,
            path: $path,
            text: include_str!(concat!("../../data/tables/", $path)),
        }
    };
}

static ASSETS: &[Asset] = &[
    asset!(Delta2, 5, "delta2/005.txt"),
    asset!(Delta2, 15, "delta2/015.txt"),
    asset!(Delta2, 17, "delta2/017.txt"),
    asset!(Delta2, 21, "delta2/021.txt"),
    asset!(Delta2, 23, "delta2/023.txt"),
    asset!(Delta2, 27, "delta2/027.txt"),
    asset!(Delta2, 29, "delta2/029.txt"),
    asset!(Delta2, 33, "delta2/033.txt"),
    asset!(Delta2, 39, "delta2/039.txt"),
    asset!(Delta3, 10, "delta3/010.txt"),
    asset!(Delta3, 40, "delta3/040.txt"),
    asset!(Delta3, 46, "delta3/046.txt"),
    asset!(Delta3, 52, "delta3/052.txt"),
    asset!(Delta3, 58, "delta3/058.txt"),
    asset!(Delta3, 64, "delta3/064.txt"),
    asset!(Delta3, 70, "delta3/070.txt"),
    asset!(Delta3, 76, "delta3/076.txt"),
    asset!(Delta3, 82, "delta3/082.txt"),
    asset!(Delta3, 88, "delta3/088.txt"),
    asset!(Delta3, 94, "delta3/094.txt"),
    asset!(Delta3, 100, "delta3/100.txt"),
    asset!(Delta3, 106, "delta3/106.txt"),
    asset!(Delta3, 112, "delta3/112.txt"),
    asset!(Delta3, 118, "delta3/118.txt"),
    asset!(Delta3, 124, "delta3/124.txt"),
    asset!(Delta3, 130, "delta3/130.txt"),
    asset!(Delta3, 136, "delta3/136.txt"),
    asset!(Delta3, 142, "delta3/142.txt"),
    asset!(Delta3, 148, "delta3/148.txt"),
    asset!(Delta3, 154, "delta3/154.txt"),
    asset!(Delta3, 160, "delta3/160.txt"),
    asset!(Delta3, 166, "delta3/166.txt"),
    asset!(Delta3, 172, "delta3/172.txt"),
    asset!(Delta3, 178, "delta3/178.txt"),
    asset!(Delta3, 184, "delta3/184.txt"),
    asset!(Delta3, 190, "delta3/190.txt"),
    asset!(Delta3, 196, "delta3/196.txt"),
    asset!(Delta3, 202, "delta3/202.txt"),
    asset!(Delta4, 105, "delta4/105.txt"),
    asset!(Delta4, 117, "delta4/117.txt"),
];

const MANIFEST: &str = include_str!("../../data/tables/SHA256SUMS");

fn hex_digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn check(asset: &Asset) -> Result<()> {
    let expected = MANIFEST
        .lines()
        .find_map(|l| {
            let (sum, path) = l.split_once(char::is_whitespace)?;
            (path.trim() == asset.path).then_some(sum)
        })
        .ok_or_else(|| Error::ChecksumMismatch(format!("{} missing from manifest", asset.path)))?;
    if hex_digest(asset.text) != expected {
        return Err(Error::ChecksumMismatch(asset.path.to_string()));
    }
    Ok(())
}

/// The embedded base blocks for `order` in `family`.
pub fn builtin_table(order: usize, family: Family) -> Result<BaseBlockSet> {
    let asset = ASSETS
        .iter()
        .find(|a| a.family == family && a.order == order)
        .ok_or_else(|| Error::UnknownTable { order, family: family.to_string() })?;
    check(asset)?;
    io::from_text(asset.text)
}

/// Orders with an embedded table, ascending.
pub fn builtin_orders(family: Family) -> Vec<usize> {
    let mut orders: Vec<usize> = ASSETS.iter().filter(|a| a.family == family).map(|a| a.order).collect();
    orders.sort_unstable();
    orders
}

/// Every embedded table as `(family, order)`.
pub fn all_builtin() -> Vec<(Family, usize)> {
    Family::ALL.iter().flat_map(|&f| builtin_orders(f).into_iter().map(move |o| (f, o))).collect()
}

/// Checks every embedded table against the manifest.
pub fn verify_checksums() -> Result<()> {
    ASSETS.iter().try_for_each(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_covers_every_asset() {
        verify_checksums().unwrap();
        assert_eq!(MANIFEST.lines().count(), ASSETS.len());
    }

    #[test]
    fn expected_orders_present() {
        assert_eq!(builtin_orders(Family::Delta2), vec![5, 15, 17, 21, 23, 27, 29, 33, 39]);
        let mut d3 = vec![10];
        d3.extend((40..=202).step_by(6));
        assert_eq!(builtin_orders(Family::Delta3), d3);
        assert_eq!(builtin_orders(Family::Delta4), vec![105, 117]);
    }

    #[test]
    fn unknown_table() {
        assert!(matches!(builtin_table(11, Family::Delta2), Err(Error::UnknownTable { .. })));
        assert!(matches!(builtin_table(10, Family::Delta2), Err(Error::UnknownTable { .. })));
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("delta9".parse::<Family>().is_err());
    }
}

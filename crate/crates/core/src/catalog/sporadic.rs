/// The 26 sporadic simple groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    M23,
    M24,
    J1,
    J2,
    J3,
    J4,
    Co1,
    Co2,
    Co3,
    Fi22,
    Fi23,
    Fi24,
    HS,
    McL,
    He,
    Ru,
    Suz,
    ON,
    HN,
    Ly,
    Th,
    B,
    M,
}

pub(crate) struct SporadicData {
    pub group: Sporadic,
    pub token: &'static str,
    pub name: &'static str,
    pub order: &'static [(u64, u32)],
    pub multiplier: &'static [u64],
}

macro_rules! spor {
    ($g:ident, $tok:expr, $name:expr, [$(($p:expr, $e:expr)),*], [$($m:expr),*]) => {
        SporadicData {
            group: Sporadic::$g,
            token: $tok,
            name: $name,
            order: &[$(($p, $e)),*],
            multiplier: &[$($m),*],
        }
    };
}

pub(crate) static SPORADICS: [SporadicData; 26] = [
    spor!(M11, "M11", "M11", [(2, 4), (3, 2), (5, 1), (11, 1)], []),
    spor!(M12, "M12", "M12", [(2, 6), (3, 3), (5, 1), (11, 1)], [2]),
    spor!(M22, "M22", "M22", [(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)], [12]),
    spor!(M23, "M23", "M23", [(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)], []),
    spor!(M24, "M24", "M24", [(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)], []),
    spor!(J1, "J1", "J1", [(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)], []),
    spor!(J2, "J2", "J2", [(2, 7), (3, 3), (5, 2), (7, 1)], [2]),
    spor!(J3, "J3", "J3", [(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)], [3]),
    spor!(
        J4,
        "J4",
        "J4",
        [(2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1)],
        []
    ),
    spor!(Co1, "CO1", "Co1", [(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)], [2]),
    spor!(Co2, "CO2", "Co2", [(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)], []),
    spor!(Co3, "CO3", "Co3", [(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)], []),
    spor!(Fi22, "FI22", "Fi22", [(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)], [6]),
    spor!(
        Fi23,
        "FI23",
        "Fi23",
        [(2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1)],
        []
    ),
    spor!(
        Fi24,
        "FI24",
        "Fi24'",
        [(2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1)],
        [3]
    ),
    spor!(HS, "HS", "HS", [(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)], [2]),
    spor!(McL, "MCL", "McL", [(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)], [3]),
    spor!(He, "HE", "He", [(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)], []),
    spor!(Ru, "RU", "Ru", [(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)], [2]),
    spor!(Suz, "SUZ", "Suz", [(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)], [6]),
    spor!(ON, "ON", "O'N", [(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)], [3]),
    spor!(HN, "HN", "HN", [(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)], []),
    spor!(
        Ly,
        "LY",
        "Ly",
        [(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)],
        []
    ),
    spor!(Th, "TH", "Th", [(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)], []),
    spor!(
        B,
        "B",
        "B",
        [
            (2, 41), (3, 13), (5, 6), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1),
            (31, 1), (47, 1)
        ],
        [2]
    ),
    spor!(
        M,
        "M",
        "M",
        [
            (2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3), (17, 1), (19, 1), (23, 1),
            (29, 1), (31, 1), (41, 1), (47, 1), (59, 1), (71, 1)
        ],
        []
    ),
];

impl Sporadic {
    pub fn all() -> impl Iterator<Item = Sporadic> {
        SPORADICS.iter().map(|d| d.group)
    }

    pub(crate) fn data(self) -> &'static SporadicData {
        SPORADICS.iter().find(|d| d.group == self).expect("every sporadic has data")
    }

    pub fn token(self) -> &'static str {
        self.data().token
    }

    pub fn name(self) -> &'static str {
        self.data().name
    }

    pub fn from_token(tok: &str) -> Option<Sporadic> {
        let up = tok.to_ascii_uppercase();
        let up = up.trim_end_matches('\'').replace('\'', "");
        SPORADICS.iter().find(|d| d.token == up).map(|d| d.group)
    }
}

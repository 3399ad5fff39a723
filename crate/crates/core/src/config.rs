/// Resource caps for the exponential enumerations and the graded linear
/// algebra. Exceeding a cap is an explicit error, never silent thrashing.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Largest vertex count for cut-set enumeration (subset lattice walk).
    pub cut_set_vertices: usize,
    /// Largest vertex count for brute-force closed-labelling search.
    pub closed_search_vertices: usize,
    /// Largest admissible-path count per graph.
    pub admissible_paths: usize,
    /// Largest monomial-basis dimension for a graded piece.
    pub graded_dimension: usize,
    /// Largest ambient variable count for Hochster-formula regularity.
    pub hochster_variables: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cut_set_vertices: 16,
            closed_search_vertices: 9,
            admissible_paths: 200_000,
            graded_dimension: 200_000,
            hochster_variables: 20,
        }
    }
}

impl Caps {
    /// Reads overrides from `VNUM_CAP_*` environment variables.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        let read = |name: &str| std::env::var(name).ok().and_then(|v| v.parse().ok());
        if let Some(v) = read("VNUM_CAP_CUT_SET_VERTICES") {
            caps.cut_set_vertices = v;
        }
        if let Some(v) = read("VNUM_CAP_CLOSED_SEARCH_VERTICES") {
            caps.closed_search_vertices = v;
        }
        if let Some(v) = read("VNUM_CAP_ADMISSIBLE_PATHS") {
            caps.admissible_paths = v;
        }
        if let Some(v) = read("VNUM_CAP_GRADED_DIMENSION") {
            caps.graded_dimension = v;
        }
        if let Some(v) = read("VNUM_CAP_HOCHSTER_VARIABLES") {
            caps.hochster_variables = v;
        }
        caps
    }
}

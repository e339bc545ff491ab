//! Small reference diagrams used across tests and as CLI demo inputs.

use crate::diagram::Diagram;

/// Left-handed trefoil (writhe -3 under this crate's sign convention).
pub fn trefoil() -> Diagram {
    Diagram::parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap()
}

/// Right-handed trefoil.
pub fn trefoil_right() -> Diagram {
    trefoil().mirror()
}

/// Figure-eight knot, writhe 0.
pub fn figure_eight() -> Diagram {
    Diagram::parse_pd("[[5,1,6,0],[1,5,2,4],[7,2,0,3],[3,6,4,7]]").unwrap()
}

/// One-crossing unknot (R1 kink) of the given sign.
pub fn kink(positive: bool) -> Diagram {
    if positive {
        Diagram::parse_pd("[[0,0,1,1]]").unwrap()
    } else {
        Diagram::parse_pd("[[0,1,1,0]]").unwrap()
    }
}

/// Two-crossing unknot (an R2 poke; opposite-sign pair, writhe 0).
pub fn unknot_r2() -> Diagram {
    Diagram::parse_pd("[[0,0,1,3],[1,2,2,3]]").unwrap()
}

/// Two-crossing unknot made of two same-sign twists (writhe -2).
pub fn unknot_twist2() -> Diagram {
    Diagram::parse_pd("[[0,3,1,0],[1,2,2,3]]").unwrap()
}

/// A 42-crossing hard unknot diagram whose R3 orbit has 6225 members.
pub const HARD_42_PD: &str = "[[62,25,63,26],[59,4,60,5],[66,17,67,18],[63,11,64,10],[73,19,74,18],[83,33,84,32],[78,41,79,42],[38,31,39,32],[52,46,53,45],[75,46,76,47],[44,52,45,51],[65,55,66,54],[79,48,80,49],[74,53,75,54],[40,57,41,58],[70,61,71,62],[60,69,61,70],[49,76,50,77],[68,71,69,72],[47,80,48,81],[81,57,82,56],[42,77,43,78],[50,44,51,43],[11,16,12,17],[5,26,6,27],[7,28,8,29],[34,29,35,30],[8,36,9,35],[30,37,31,38],[27,6,28,7],[36,10,37,9],[15,12,16,13],[23,15,24,14],[3,21,4,20],[67,23,68,22],[72,21,73,22],[13,25,14,24],[55,65,56,64],[33,1,34,84],[58,2,59,1],[39,82,40,83],[19,3,20,2]]";

pub fn hard_42() -> Diagram {
    Diagram::parse_pd(HARD_42_PD).unwrap()
}

/// Connected-sum replay fixture: a diagram, its two summands, a minimal
/// unknotting set, and the partial-switch data for the intermediate knot.
pub struct SumFixture {
    /// Knot-table name of the intermediate knot on the trajectory.
    pub name: &'static str,
    /// Diagram of the connected sum K1 # K2.
    pub initial_pd: &'static str,
    pub k1_pd: &'static str,
    pub k2_pd: &'static str,
    /// Signature-derived lower bounds for the two summands.
    pub u_lower: (u32, u32),
    /// Minimal unknotting set, as indices into `initial_pd`'s tuple list.
    pub minimal_sequence: &'static [usize],
    /// Subset of the minimal set whose switches produce the intermediate knot.
    pub initial_switches: &'static [usize],
    /// Intermediate diagram after `initial_switches` and simplification
    /// (absent for the fixture whose intermediate is the knot itself).
    pub mid_pd: Option<&'static str>,
    /// One further switch into `mid_pd` reaching the named knot.
    pub final_switch: Option<usize>,
    /// Diagram of the named knot reached after `final_switch`.
    pub final_pd: Option<&'static str>,
}

impl SumFixture {
    pub fn initial(&self) -> Diagram {
        Diagram::parse_pd(self.initial_pd).unwrap()
    }
    pub fn k1(&self) -> Diagram {
        Diagram::parse_pd(self.k1_pd).unwrap()
    }
    pub fn k2(&self) -> Diagram {
        Diagram::parse_pd(self.k2_pd).unwrap()
    }
    pub fn mid(&self) -> Option<Diagram> {
        self.mid_pd.map(|s| Diagram::parse_pd(s).unwrap())
    }
    pub fn final_diagram(&self) -> Option<Diagram> {
        self.final_pd.map(|s| Diagram::parse_pd(s).unwrap())
    }
}

pub const SUM_12A898: SumFixture = SumFixture {
    name: "12a898",
    initial_pd: "[[135,86,136,87],[133,11,134,10],[128,78,129,77],[131,70,132,71],[129,65,130,64],[132,57,133,58],[125,76,126,77],[124,76,125,75],[122,186,123,185],[117,43,118,42],[119,21,120,20],[121,18,122,19],[116,191,117,192],[112,47,113,48],[114,23,115,24],[111,17,112,16],[107,62,108,63],[105,61,106,60],[103,8,104,9],[101,183,102,182],[99,3,100,2],[98,38,99,37],[97,28,98,29],[172,188,173,187],[94,89,95,90],[175,81,176,80],[180,55,181,56],[176,50,177,49],[173,46,174,47],[170,20,171,19],[96,193,97,0],[168,189,169,190],[165,52,166,53],[167,45,168,44],[163,84,164,85],[164,25,165,26],[161,68,162,69],[158,84,159,83],[160,68,161,67],[146,184,147,183],[157,82,158,83],[152,74,153,73],[155,66,156,67],[150,62,151,61],[154,14,155,13],[148,9,149,10],[144,36,145,35],[143,30,144,31],[141,88,142,89],[138,33,139,34],[139,33,140,32],[136,88,137,87],[153,130,154,131],[110,127,111,128],[108,123,109,124],[171,120,172,121],[166,115,167,116],[126,109,127,110],[149,104,150,105],[145,100,146,101],[140,93,141,94],[134,181,135,182],[162,179,163,180],[156,177,157,178],[113,174,114,175],[118,169,119,170],[178,159,179,160],[106,151,107,152],[102,147,103,148],[95,142,96,143],[92,137,93,138],[43,191,44,190],[21,189,22,188],[7,185,8,184],[31,91,32,90],[54,86,55,85],[48,80,49,79],[15,78,16,79],[63,75,64,74],[58,72,59,71],[12,70,13,69],[72,60,73,59],[26,53,27,54],[81,51,82,50],[6,42,7,41],[4,40,5,39],[1,37,2,36],[91,35,92,34],[192,28,193,27],[51,24,52,25],[45,23,46,22],[186,18,187,17],[65,15,66,14],[56,11,57,12],[40,6,41,5],[38,4,39,3],[29,1,30,0]]",
    k1_pd: "[(3,18,4,19),(29,10,30,11),(31,12,32,13),(33,14,34,15),(24,17,25,18),(6,37,7,0),(7,26,8,27),(16,23,17,24),(1,20,2,21),(21,2,22,3),(27,8,28,9),(22,15,23,16),(25,34,26,35),(13,32,14,33),(11,30,12,31),(36,5,37,6),(4,35,5,36),(9,28,10,29),(19,0,20,1)]",
    k2_pd: "[(9,25,10,24),(26,42,27,41),(23,38,24,39),(6,34,7,33),(3,41,4,40),(16,44,17,43),(51,33,0,32),(17,13,18,12),(31,51,32,50),(21,9,22,8),(49,5,50,4),(20,45,21,46),(19,15,20,14),(46,28,47,27),(1,37,2,36),(42,11,43,12),(39,3,40,2),(37,22,38,23),(13,19,14,18),(28,48,29,47),(30,6,31,5),(48,30,49,29),(25,11,26,10),(44,16,45,15),(34,8,35,7),(35,1,36,0)]",
    u_lower: (8, 7),
    minimal_sequence: &[49, 0, 20, 1, 57, 76, 66, 85, 84, 79, 56, 96, 67, 65, 69],
    initial_switches: &[49, 0, 1, 57, 76, 66, 85, 84, 79, 56, 96, 67],
    mid_pd: None,
    final_switch: None,
    final_pd: None,
};

const INITIAL_12A916_12A999: &str = "[(55,22,56,23),(58,34,59,33),(57,36,58,37),(59,19,60,18),(63,14,64,15),(61,30,62,31),(64,40,65,39),(65,27,66,26),(69,44,70,45),(67,49,68,48),(71,11,72,10),(73,108,74,109),(80,16,81,15),(76,21,77,22),(82,32,83,31),(79,38,80,39),(85,12,86,13),(86,42,87,41),(88,3,89,4),(89,47,90,46),(92,43,93,44),(90,2,91,1),(94,10,95,9),(95,110,96,111),(98,6,99,5),(96,7,97,8),(97,24,98,25),(100,37,101,38),(101,17,102,16),(104,30,105,29),(106,108,107,107),(52,109,53,110),(77,57,78,56),(87,67,88,66),(93,71,94,70),(51,73,52,72),(54,76,55,75),(102,82,103,81),(60,84,61,83),(68,92,69,91),(78,100,79,99),(62,104,63,103),(84,106,85,105),(74,54,75,53),(23,6,24,7),(111,8,0,9),(32,17,33,18),(35,20,36,21),(4,25,5,26),(13,28,14,29),(19,34,20,35),(27,40,28,41),(49,42,50,43),(2,47,3,48),(11,50,12,51),(45,0,46,1)]";
const K1_12A916_12A999: &str = "[(11,4,12,5),(1,8,2,9),(18,13,19,14),(16,21,17,22),(12,19,13,20),(20,23,21,0),(9,2,10,3),(15,6,16,7),(3,10,4,11),(22,17,23,18),(7,14,8,15),(5,0,6,1)]";
const K2_12A916_12A999: &str = "[(2,10,3,9),(19,11,20,10),(16,6,17,5),(4,16,5,15),(1,19,2,18),(11,21,12,20),(14,4,15,3),(13,23,14,22),(23,7,0,6),(21,13,22,12),(8,18,9,17),(7,1,8,0)]";
const SEQUENCE_12A916_12A999: &[usize] = &[10, 44, 46, 47, 53, 33, 42, 7, 36];
const SWITCHES_12A916_12A999: &[usize] = &[10, 46, 53, 42, 36];

pub const SUM_12A916: SumFixture = SumFixture {
    name: "12a916",
    initial_pd: INITIAL_12A916_12A999,
    k1_pd: K1_12A916_12A999,
    k2_pd: K2_12A916_12A999,
    u_lower: (4, 5),
    minimal_sequence: SEQUENCE_12A916_12A999,
    initial_switches: SWITCHES_12A916_12A999,
    mid_pd: Some("[(5,22,6,23),(9,27,10,26),(19,8,20,9),(14,23,15,24),(11,3,12,2),(13,5,14,4),(16,8,17,7),(1,11,2,10),(3,13,4,12),(6,16,7,15),(24,17,25,18),(27,20,0,21),(18,25,19,26),(21,0,22,1)]"),
    final_switch: Some(3),
    final_pd: Some("[(6,23,7,24),(8,26,9,25),(18,9,19,10),(22,16,23,15),(11,3,12,2),(13,5,14,4),(16,8,17,7),(1,11,2,10),(3,13,4,12),(5,15,6,14),(24,17,25,18),(27,20,0,21),(19,26,20,27),(21,0,22,1)]"),
};

pub const SUM_12A999: SumFixture = SumFixture {
    name: "12a999",
    initial_pd: INITIAL_12A916_12A999,
    k1_pd: K1_12A916_12A999,
    k2_pd: K2_12A916_12A999,
    u_lower: (4, 5),
    minimal_sequence: SEQUENCE_12A916_12A999,
    initial_switches: SWITCHES_12A916_12A999,
    mid_pd: Some("[(5,26,6,27),(6,30,7,29),(21,10,22,11),(15,22,16,23),(14,2,15,1),(12,4,13,3),(16,8,17,7),(18,10,19,9),(2,12,3,11),(4,14,5,13),(8,18,9,17),(27,20,28,21),(31,24,0,25),(19,28,20,29),(23,30,24,31),(25,0,26,1)]"),
    final_switch: Some(0),
    // Note: the published table lists a final PD identical to the
    // intermediate one; the replay reports the mismatch rather than hiding it.
    final_pd: Some("[(5,26,6,27),(6,30,7,29),(21,10,22,11),(15,22,16,23),(14,2,15,1),(12,4,13,3),(16,8,17,7),(18,10,19,9),(2,12,3,11),(4,14,5,13),(8,18,9,17),(27,20,28,21),(31,24,0,25),(19,28,20,29),(23,30,24,31),(25,0,26,1)]"),
};

pub const SUM_FIXTURES: [&SumFixture; 3] = [&SUM_12A898, &SUM_12A916, &SUM_12A999];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse_with_expected_sizes() {
        assert_eq!(hard_42().n(), 42);
        assert_eq!(SUM_12A898.initial().n(), 97);
        assert_eq!(SUM_12A898.k1().n(), 19);
        assert_eq!(SUM_12A898.k2().n(), 26);
        for f in [&SUM_12A916, &SUM_12A999] {
            assert_eq!(f.initial().n(), 56);
            assert_eq!(f.k1().n(), 12);
            assert_eq!(f.k2().n(), 12);
        }
        assert_eq!(SUM_12A916.mid().unwrap().n(), 14);
        assert_eq!(SUM_12A916.final_diagram().unwrap().n(), 14);
        assert_eq!(SUM_12A999.mid().unwrap().n(), 16);
        assert_eq!(SUM_12A999.final_diagram().unwrap().n(), 16);
    }

    #[test]
    fn shared_initial_diagrams_are_canonically_equal() {
        assert_eq!(
            SUM_12A916.initial().canonical_code(),
            SUM_12A999.initial().canonical_code()
        );
    }
}

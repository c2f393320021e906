use super::{ObjectivePoint, Tree};

/// A non-dominated point with one tree attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierPoint {
    pub point: ObjectivePoint,
    pub tree: Tree,
}

/// Mutually non-dominated points sorted by strictly increasing cable cost
/// (and therefore strictly decreasing trench cost).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Frontier {
    points: Vec<FrontierPoint>,
}

impl Frontier {
    /// Wraps points that already satisfy the frontier ordering, or `None`.
    pub fn from_sorted(points: Vec<FrontierPoint>) -> Option<Frontier> {
        let ok = points
            .windows(2)
            .all(|w| w[0].point.cable < w[1].point.cable && w[0].point.trench > w[1].point.trench);
        ok.then_some(Frontier { points })
    }

    pub fn points(&self) -> &[FrontierPoint] {
        &self.points
    }

    pub fn objective_points(&self) -> Vec<ObjectivePoint> {
        self.points.iter().map(|p| p.point).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> Option<&FrontierPoint> {
        self.points.first()
    }

    pub fn last(&self) -> Option<&FrontierPoint> {
        self.points.last()
    }

    pub fn into_points(self) -> Vec<FrontierPoint> {
        self.points
    }
}

impl<'a> IntoIterator for &'a Frontier {
    type Item = &'a FrontierPoint;
    type IntoIter = std::slice::Iter<'a, FrontierPoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Keeps exactly the non-dominated points. Duplicates collapse onto their
/// first occurrence.
pub fn dominance_filter<I>(candidates: I) -> Frontier
where
    I: IntoIterator<Item = FrontierPoint>,
{
    let mut all: Vec<FrontierPoint> = candidates.into_iter().collect();
    // stable, so the first witness of a duplicated point wins
    all.sort_by_key(|p| p.point);
    let mut points: Vec<FrontierPoint> = Vec::new();
    for p in all {
        if points
            .last()
            .is_none_or(|q| p.point.trench < q.point.trench)
        {
            points.push(p);
        }
    }
    Frontier { points }
}

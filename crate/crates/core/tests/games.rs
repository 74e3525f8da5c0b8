use std::collections::BTreeSet;

use stairdec::bridge::c4_decompositions;
use stairdec::games::{c4_games, f, iterated_partitions, staircases_of_size, young_diagram};
use stairdec::staircase::{Point, StandardSet};
use stairdec_oracle::{brute_staircases, iterated_partition_count, partition_count};

#[test]
fn f_is_a_bijection() {
    for d in 1..=4 {
        for n in 1..=6 {
            let parts = iterated_partitions(n, d - 1).unwrap();
            let games = c4_games(n, d).unwrap();
            assert_eq!(parts.len(), games.len(), "n={n} d={d}");
            assert_eq!(parts.len() as u64, iterated_partition_count(n, d - 1), "n={n} d={d}");
            let images: BTreeSet<_> = parts.iter().map(|p| f(p, d).unwrap()).collect();
            assert_eq!(images.len(), parts.len(), "f is not injective at n={n} d={d}");
            assert_eq!(images, games.into_iter().collect(), "f is not surjective at n={n} d={d}");
        }
    }
}

#[test]
fn small_game_counts() {
    assert_eq!(c4_games(3, 3).unwrap().len(), 6);
    for n in 1..=6 {
        assert_eq!(c4_games(n, 2).unwrap().len() as u64, partition_count(n));
    }
    assert_eq!((1..=6).map(partition_count).collect::<Vec<_>>(), vec![1, 2, 3, 5, 7, 11]);
}

#[test]
fn staircases_of_size_match_brute_force() {
    for d in 1..=4 {
        for n in 0..=6 {
            let found: BTreeSet<StandardSet> = staircases_of_size(n, d).into_iter().collect();
            let brute: BTreeSet<StandardSet> = brute_staircases(n, d)
                .into_iter()
                .map(|c| StandardSet::from_cells(d, c.into_iter().map(Point)).unwrap())
                .collect();
            assert_eq!(found, brute, "n={n} d={d}");
        }
    }
}

#[test]
fn three_dimensional_games_count_c4_decompositions() {
    assert!(c4_games(0, 3).is_err() && iterated_partitions(0, 2).is_err());
    for n in 1..=5 {
        let total: usize = staircases_of_size(n, 3).iter().map(|s| c4_decompositions(s).unwrap().len()).sum();
        assert_eq!(c4_games(n, 3).unwrap().len(), total, "n={n}");
    }
}

#[test]
fn young_diagrams_are_french() {
    let y = young_diagram(&[3, 1]);
    assert_eq!(y.cardinality(), 4);
    assert!(y.contains(&Point(vec![2, 0])));
    assert!(y.contains(&Point(vec![0, 1])));
    assert!(!y.contains(&Point(vec![1, 1])));
}

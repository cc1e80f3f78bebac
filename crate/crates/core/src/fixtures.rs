//! Small instances in the crate's file formats, shared by tests and examples.

/// A 3x4 candidate graph with degrees 2 and 3.
pub const SAMPLE_GRAPH: &str = "\
# 3 columns x 4 rows
grid 3 4
edge 0 0 0 1
edge 0 1 0 2
edge 0 2 0 3
edge 1 0 1 1
edge 1 1 1 2
edge 2 0 2 1
edge 2 2 2 3
edge 0 0 1 0
edge 0 3 1 3
edge 1 0 2 0
edge 1 1 2 1
edge 1 2 2 2
edge 1 3 2 3
";

/// 5x5 All or Nothing board with six regions.
pub const SAMPLE_AON: &str = "\
aon 5 5
C D D D F
C D D D F
C C E D D
A A B B B
A A A B B
";

pub const SAMPLE_AON_LOOP: &str = "\
loop 18
2 2
1 2
0 2
0 3
0 4
1 4
1 3
2 3
2 4
3 4
3 3
3 2
4 2
4 1
4 0
3 0
3 1
2 1
";

/// 5x5 Water Walk board with numbers 2, 3, 1.
pub const SAMPLE_WW: &str = "\
ww 5 5
~~~~~
.~..~
.~~1~
2..3~
~~.~~
";

pub const SAMPLE_WW_LOOP: &str = "\
loop 14
0 0
1 0
2 0
2 1
3 1
4 1
4 2
3 2
2 2
2 3
1 3
1 2
0 2
0 1
";

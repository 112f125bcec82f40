NAME_CLAIM = "claim"
NAME_LHS = "lhs"
NAME_RHS = "rhs"
NAME_PASS = "pass"
NAME_RELATION = "relation"
NAME_POSITION = "position"
NAME_DIRECTION = "direction"
NAME_RANK = "rank"
NAME_ORACLE = "oracle"
NAME_DIMENSION = "dimension"

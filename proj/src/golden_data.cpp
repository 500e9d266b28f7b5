// Published reference values. Generated once from the published tables;
// rows are n = 1, 2, ...; do not edit by hand.

#include "golden_data.hpp"

namespace tomseq::detail {

const std::vector<GoldenSpec>& golden_specs() {
  static const std::vector<GoldenSpec> specs = {
      {"classcounts", 'S', "conjugacy classes of subgroups, total and by property",
       {"classes", "abelian", "cyclic", "nilpotent", "solvable", "supersolvable"},
       {
           {1, 1, 1, 1, 1, 1},
           {2, 2, 2, 2, 2, 2},
           {4, 3, 3, 3, 4, 4},
           {11, 7, 5, 8, 11, 9},
           {19, 9, 7, 10, 17, 15},
           {56, 20, 11, 25, 50, 38},
           {96, 26, 15, 32, 84, 65},
           {296, 61, 22, 127, 268, 187},
           {554, 82, 30, 156, 485, 341},
           {1593, 180, 42, 531, 1418, 923},
           {3094, 236, 56, 648, 2691, 1789},
           {10723, 594, 77, 3727, 9725, 6118},
           {20832, 762, 101, 4221, 18286, 11616},
       }},
      {"classcounts", 'A', "conjugacy classes of subgroups, total and by property",
       {"classes", "abelian", "cyclic", "nilpotent", "solvable", "supersolvable"},
       {
           {1, 1, 1, 1, 1, 1},
           {1, 1, 1, 1, 1, 1},
           {2, 2, 2, 2, 2, 2},
           {5, 4, 3, 4, 5, 4},
           {9, 5, 4, 5, 8, 7},
           {22, 9, 6, 10, 19, 14},
           {40, 12, 8, 13, 33, 22},
           {137, 30, 12, 53, 122, 70},
           {223, 41, 17, 69, 192, 122},
           {430, 60, 23, 122, 364, 225},
           {788, 81, 29, 160, 650, 395},
           {2537, 193, 40, 734, 2194, 1240},
           {4558, 243, 52, 848, 3845, 2185},
       }},
      {"orders", 'S', "distinct subgroup orders and divisors of |G| that are not subgroup orders",
       {"distinct_orders", "missing_orders"},
       {
           {1, 0},
           {2, 0},
           {4, 0},
           {8, 0},
           {13, 3},
           {21, 9},
           {31, 29},
           {49, 47},
           {74, 86},
           {113, 157},
           {139, 401},
           {216, 576},
           {268, 1316},
       }},
      {"orders", 'A', "distinct subgroup orders and divisors of |G| that are not subgroup orders",
       {"distinct_orders", "missing_orders"},
       {
           {1, 0},
           {1, 0},
           {2, 0},
           {5, 1},
           {9, 3},
           {15, 9},
           {22, 26},
           {38, 46},
           {59, 81},
           {89, 151},
           {115, 365},
           {180, 540},
           {226, 1214},
       }},
      {"totals", 'S', "total number of subgroups",
       {"subgroups"},
       {
           {1},
           {2},
           {6},
           {30},
           {156},
           {1455},
           {11300},
           {151221},
           {1694723},
           {29594446},
           {404126228},
           {10594925360},
           {175238308453},
       }},
      {"totals", 'A', "total number of subgroups",
       {"subgroups"},
       {
           {1},
           {1},
           {2},
           {10},
           {59},
           {501},
           {3786},
           {48337},
           {508402},
           {6469142},
           {81711572},
           {2019160542},
           {31945830446},
       }},
      {"sums", 'S', "sum of all marks and sum of the diagonal",
       {"sum_of_marks", "diagonal_sum"},
       {
           {1, 1},
           {4, 3},
           {18, 10},
           {146, 47},
           {681, 165},
           {7518, 950},
           {58633, 5632},
           {952826, 43772},
           {11168496, 376586},
           {232255571, 3717663},
           {3476965896, 40555909},
           {108673489373, 484838080},
           {1951392769558, 6286289685},
       }},
      {"sums", 'A', "sum of all marks and sum of the diagonal",
       {"sum_of_marks", "diagonal_sum"},
       {
           {1, 1},
           {1, 1},
           {5, 4},
           {39, 19},
           {192, 73},
           {1717, 412},
           {13946, 2660},
           {243391, 21449},
           {2693043, 184541},
           {38343715, 1827841},
           {545787051, 20043736},
           {15787210045, 240206213},
           {268796141406, 3119816216},
       }},
      {"incidences", 'S', "incidences in the class poset and in the subgroup lattice",
       {"poset", "lattice"},
       {
           {1, 1},
           {3, 3},
           {9, 11},
           {44, 68},
           {101, 262},
           {523, 2261},
           {1195, 14032},
           {6751, 176245},
           {16986, 1821103},
           {87884, 30883491},
           {248635, 415843982},
           {1709781, 10779423937},
           {4665651, 177718085432},
       }},
      {"incidences", 'A', "incidences in the class poset and in the subgroup lattice",
       {"poset", "lattice"},
       {
           {1, 1},
           {1, 1},
           {3, 3},
           {13, 18},
           {32, 85},
           {128, 657},
           {330, 4374},
           {2309, 55711},
           {4271, 530502},
           {12468, 6603007},
           {33329, 82736601},
           {196182, 2032940127},
           {490137, 32102236563},
       }},
      {"edges", 'S', "Hasse edges in the class poset and in the subgroup lattice",
       {"poset", "lattice"},
       {
           {0, 0},
           {1, 1},
           {4, 8},
           {17, 66},
           {37, 501},
           {149, 6469},
           {290, 60428},
           {1080, 926743},
           {2267, 11902600},
           {8023, 240066343},
           {17249, 3677270225},
           {72390, 108748156239},
           {153419, 1980478458627},
       }},
      {"edges", 'A', "Hasse edges in the class poset and in the subgroup lattice",
       {"poset", "lattice"},
       {
           {0, 0},
           {0, 0},
           {1, 1},
           {5, 15},
           {13, 168},
           {44, 2051},
           {98, 19305},
           {419, 283258},
           {722, 3255913},
           {1592, 46464854},
           {3304, 670282962},
           {12645, 18723796793},
           {24792, 321480817412},
       }},
      {"maxprop", 'S', "classes of maximal property-P subgroups",
       {"solvable", "supersolvable", "abelian", "cyclic", "nilpotent"},
       {
           {1, 1, 1, 1, 1},
           {1, 1, 1, 1, 1},
           {1, 1, 2, 2, 2},
           {1, 2, 4, 3, 2},
           {3, 3, 5, 3, 3},
           {4, 4, 7, 5, 5},
           {5, 5, 10, 6, 6},
           {6, 6, 17, 11, 7},
           {9, 8, 23, 15, 9},
           {12, 11, 30, 20, 12},
           {14, 14, 41, 24, 15},
           {17, 19, 61, 34, 20},
           {24, 23, 80, 43, 25},
       }},
      {"maxprop", 'A', "classes of maximal property-P subgroups",
       {"solvable", "supersolvable", "abelian", "cyclic", "nilpotent"},
       {
           {1, 1, 1, 1, 1},
           {1, 1, 1, 1, 1},
           {1, 1, 1, 1, 1},
           {1, 2, 2, 2, 2},
           {3, 3, 3, 3, 3},
           {4, 3, 5, 4, 3},
           {5, 4, 6, 5, 5},
           {6, 6, 13, 6, 6},
           {10, 8, 19, 8, 7},
           {12, 10, 22, 10, 9},
           {14, 13, 27, 14, 12},
           {17, 18, 40, 20, 17},
           {24, 22, 54, 24, 20},
       }},
      {"maxtotals", 'S', "maximal property-P subgroups, counted individually",
       {"solvable", "supersolvable", "abelian", "cyclic", "nilpotent"},
       {
           {1, 1, 1, 1, 1},
           {1, 1, 1, 1, 1},
           {1, 1, 4, 4, 4},
           {1, 7, 11, 13, 7},
           {21, 31, 51, 31, 31},
           {76, 101, 241, 246, 211},
           {456, 491, 1506, 1296, 1156},
           {1956, 3011, 9649, 10774, 5419},
           {12136, 18467, 80281, 83238, 40027},
           {80836, 114983, 640741, 788820, 348331},
           {807676, 1283723, 6196576, 6835170, 3204796},
           {8779816, 13380643, 66883411, 81364944, 38422891},
           {104127596, 148321603, 775421219, 848378532, 467645179},
       }},
      {"maxtotals", 'A', "maximal property-P subgroups, counted individually",
       {"solvable", "supersolvable", "abelian", "cyclic", "nilpotent"},
       {
           {1, 1, 1, 1, 1},
           {1, 1, 1, 1, 1},
           {3, 3, 3, 3, 3},
           {1, 10, 10, 9, 10},
           {36, 40, 30, 30, 30},
           {225, 110, 115, 100, 110},
           {686, 645, 861, 665, 1001},
           {4655, 5670, 10536, 3885, 4005},
           {28728, 47754, 78474, 33093, 45696},
           {397005, 311850, 1008000, 371700, 379155},
           {2210890, 3014550, 9302964, 3790875, 4913040},
           {26975025, 24022845, 73024380, 37839285, 36701280},
           {26121667, 46950904, 563291872, 350984414, 158538380},
       }},
      {"subtotals", 'S', "subgroups by property, counted individually",
       {"subgroups", "abelian", "cyclic", "nilpotent", "solvable", "supersolvable"},
       {
           {1, 1, 1, 1, 1, 1},
           {2, 2, 2, 2, 2, 2},
           {6, 5, 5, 5, 6, 6},
           {30, 21, 17, 24, 30, 28},
           {156, 87, 67, 102, 154, 144},
           {1455, 612, 362, 837, 1429, 1259},
           {11300, 3649, 2039, 5119, 11065, 9560},
           {151221, 35515, 14170, 78670, 148817, 123102},
           {1694723, 289927, 109694, 664658, 1667697, 1371022},
           {29594446, 3771118, 976412, 13514453, 29103894, 23449585},
           {404126228, 36947363, 8921002, 137227213, 396571224, 317178020},
           {10594925360, 657510251, 101134244, 4919721831, 10450152905, 8296640115},
           {175238308453, 7736272845, 1104940280, 60598902665, 172658168937, 136245390535},
       }},
      {"subtotals", 'A', "subgroups by property, counted individually",
       {"subgroups", "abelian", "cyclic", "nilpotent", "solvable", "supersolvable"},
       {
           {1, 1, 1, 1, 1, 1},
           {1, 1, 1, 1, 1, 1},
           {2, 2, 2, 2, 2, 2},
           {10, 9, 8, 9, 10, 9},
           {59, 37, 32, 37, 58, 53},
           {501, 207, 167, 252, 488, 418},
           {3786, 1192, 947, 1507, 3664, 2894},
           {48337, 11449, 6974, 21739, 47210, 33675},
           {508402, 93673, 53426, 186983, 498102, 369763},
           {6469142, 892783, 454682, 2369258, 6293475, 4769542},
           {81711572, 8534308, 4303532, 22872863, 78805290, 58853842},
           {2019160542, 148561283, 50366912, 746597568, 1960342409, 1395051100},
           {31945830446, 1740198891, 553031624, 9157758326, 31130243721, 21847262156},
       }},
      {"redblue", 'S', "S_n-classes inside A_n (blue) and not inside A_n (red)",
       {"sn_classes", "an_classes", "blue", "red"},
       {
           {1, 1, 1, 0},
           {2, 1, 1, 1},
           {4, 2, 2, 2},
           {11, 5, 5, 6},
           {19, 9, 9, 10},
           {56, 22, 22, 34},
           {96, 40, 37, 59},
           {296, 137, 112, 184},
           {554, 223, 195, 359},
           {1593, 430, 423, 1170},
           {3094, 788, 780, 2314},
           {10723, 2537, 2401, 8322},
           {20832, 4558, 4409, 16423},
       }},
      {"connected", 'S', "class count and connected classes by property",
       {"classes", "abelian", "nilpotent", "solvable", "supersolvable"},
       {
           {1, 1, 1, 1, 1},
           {2, 1, 1, 1, 1},
           {4, 1, 1, 2, 2},
           {11, 3, 4, 6, 4},
           {19, 1, 1, 4, 4},
           {56, 6, 9, 23, 15},
           {96, 1, 1, 16, 13},
           {296, 17, 69, 122, 81},
           {554, 5, 8, 109, 77},
           {1593, 40, 238, 551, 352},
           {3094, 2, 2, 570, 406},
           {10723, 162, 2339, 4633, 2995},
           {20832, 5, 8, 4224, 2866},
       }},
      {"connected", 'A', "class count and connected classes by property",
       {"classes", "abelian", "nilpotent", "solvable", "supersolvable"},
       {
           {1, 1, 1, 1, 1},
           {1, 0, 0, 0, 0},
           {2, 1, 1, 1, 1},
           {5, 2, 2, 3, 2},
           {9, 1, 1, 3, 3},
           {22, 3, 4, 10, 6},
           {40, 1, 1, 11, 6},
           {137, 14, 36, 80, 42},
           {223, 5, 9, 52, 39},
           {430, 12, 49, 145, 85},
           {788, 2, 2, 165, 104},
           {2537, 69, 489, 1208, 686},
           {4558, 3, 4, 1033, 617},
       }},
      {"connseq", 'S', "connected-class and connected-partition sequences",
       {"an_classes_connected", "sn_classes_connected_in_an", "sn_classes_connected_not_in_an", "connected_partitions", "connected_even_partitions"},
       {
           {1, 1, 0, 1, 1},
           {0, 0, 1, 1, 0},
           {1, 1, 1, 1, 1},
           {3, 3, 3, 2, 1},
           {4, 4, 2, 1, 1},
           {12, 12, 15, 4, 2},
           {15, 12, 8, 1, 1},
           {87, 65, 65, 5, 3},
           {64, 58, 66, 3, 3},
           {168, 167, 431, 8, 4},
           {205, 198, 443, 2, 2},
           {1336, 1207, 3643, 14, 8},
           {1198, 1178, 3594, 3, 2},
       }},
      {"connseq", 'A', "connected-class and connected-partition sequences",
       {"an_classes_connected", "sn_classes_connected_in_an", "sn_classes_connected_not_in_an", "connected_partitions", "connected_even_partitions"},
       {
           {1, 1, 0, 1, 1},
           {0, 0, 1, 1, 0},
           {1, 1, 1, 1, 1},
           {3, 3, 3, 2, 1},
           {4, 4, 2, 1, 1},
           {12, 12, 15, 4, 2},
           {15, 12, 8, 1, 1},
           {87, 65, 65, 5, 3},
           {64, 58, 66, 3, 3},
           {168, 167, 431, 8, 4},
           {205, 198, 443, 2, 2},
           {1336, 1207, 3643, 14, 8},
           {1198, 1178, 3594, 3, 2},
       }},
  };
  return specs;
}

}  // namespace tomseq::detail

#include "reference_cells.hpp"

namespace permuta::bench {

// Reference fail counts for the benchmark runs; timing columns are
// hardware-bound and never embedded.
const std::vector<ReferenceCell>& reference_cells() {
    static const std::vector<ReferenceCell> cells = {
    {3, "langford:3,9", "all-diff", "lex", "first", 12},
    {3, "langford:3,10", "all-diff", "lex", "first", 42},
    {3, "langford:3,9", "c", "lex", "first", 12},
    {3, "langford:3,10", "c", "lex", "first", 43},
    {3, "langford:3,9", "neq", "lex", "first", 25},
    {3, "langford:3,10", "neq", "lex", "first", 82},
    {3, "langford:3,9", "neq-c", "lex", "first", 12},
    {3, "langford:3,10", "neq-c", "lex", "first", 43},
    {3, "langford:3,9", "c-neq", "lex", "first", 12},
    {3, "langford:3,10", "c-neq", "lex", "first", 43},
    {3, "langford:3,9", "alldiff-c", "lex", "first", 12},
    {3, "langford:3,10", "alldiff-c", "lex", "first", 42},
    {3, "langford:3,9", "c-alldiff", "lex", "first", 12},
    {3, "langford:3,10", "c-alldiff", "lex", "first", 42},
    {3, "langford:3,9", "neq-c-neq", "lex", "first", 12},
    {3, "langford:3,10", "neq-c-neq", "lex", "first", 43},
    {3, "langford:3,9", "alldiff-c-neq", "lex", "first", 12},
    {3, "langford:3,10", "alldiff-c-neq", "lex", "first", 42},
    {3, "langford:3,9", "neq-c-alldiff", "lex", "first", 12},
    {3, "langford:3,10", "neq-c-alldiff", "lex", "first", 42},
    {3, "langford:3,9", "alldiff-c-alldiff", "lex", "first", 12},
    {3, "langford:3,10", "alldiff-c-alldiff", "lex", "first", 42},
    {4, "langford:3,9", "all-diff", "lex", "all", 2006},
    {4, "langford:3,10", "all-diff", "lex", "all", 10051},
    {4, "langford:3,11", "all-diff", "lex", "all", 49118},
    {4, "langford:3,12", "all-diff", "lex", "all", 279468},
    {4, "langford:3,9", "c", "lex", "all", 2282},
    {4, "langford:3,10", "c", "lex", "all", 11336},
    {4, "langford:3,11", "c", "lex", "all", 56234},
    {4, "langford:3,12", "c", "lex", "all", 312926},
    {4, "langford:3,9", "neq", "lex", "all", 6062},
    {4, "langford:3,10", "neq", "lex", "all", 29018},
    {4, "langford:3,11", "neq", "lex", "all", 167624},
    {4, "langford:3,12", "neq", "lex", "all", 949878},
    {4, "langford:3,9", "neq-c", "lex", "all", 2282},
    {4, "langford:3,10", "neq-c", "lex", "all", 11336},
    {4, "langford:3,11", "neq-c", "lex", "all", 56234},
    {4, "langford:3,12", "neq-c", "lex", "all", 312926},
    {4, "langford:3,9", "c-neq", "lex", "all", 2282},
    {4, "langford:3,10", "c-neq", "lex", "all", 11336},
    {4, "langford:3,11", "c-neq", "lex", "all", 56234},
    {4, "langford:3,12", "c-neq", "lex", "all", 312926},
    {4, "langford:3,9", "alldiff-c", "lex", "all", 2006},
    {4, "langford:3,10", "alldiff-c", "lex", "all", 10051},
    {4, "langford:3,11", "alldiff-c", "lex", "all", 49118},
    {4, "langford:3,12", "alldiff-c", "lex", "all", 279468},
    {4, "langford:3,9", "c-alldiff", "lex", "all", 2006},
    {4, "langford:3,10", "c-alldiff", "lex", "all", 10051},
    {4, "langford:3,11", "c-alldiff", "lex", "all", 49118},
    {4, "langford:3,12", "c-alldiff", "lex", "all", 279468},
    {4, "langford:3,9", "neq-c-neq", "lex", "all", 2282},
    {4, "langford:3,10", "neq-c-neq", "lex", "all", 11336},
    {4, "langford:3,11", "neq-c-neq", "lex", "all", 56234},
    {4, "langford:3,12", "neq-c-neq", "lex", "all", 312926},
    {4, "langford:3,9", "alldiff-c-neq", "lex", "all", 2006},
    {4, "langford:3,10", "alldiff-c-neq", "lex", "all", 10051},
    {4, "langford:3,11", "alldiff-c-neq", "lex", "all", 49118},
    {4, "langford:3,12", "alldiff-c-neq", "lex", "all", 279468},
    {4, "langford:3,9", "neq-c-alldiff", "lex", "all", 2006},
    {4, "langford:3,10", "neq-c-alldiff", "lex", "all", 10051},
    {4, "langford:3,11", "neq-c-alldiff", "lex", "all", 49118},
    {4, "langford:3,12", "neq-c-alldiff", "lex", "all", 279468},
    {4, "langford:3,9", "alldiff-c-alldiff", "lex", "all", 2006},
    {4, "langford:3,10", "alldiff-c-alldiff", "lex", "all", 10051},
    {4, "langford:3,11", "alldiff-c-alldiff", "lex", "all", 49118},
    {4, "langford:3,12", "alldiff-c-alldiff", "lex", "all", 279468},
    {5, "langford:3,12", "neq", "sd_p", "all", 62016},
    {5, "langford:3,13", "neq", "sd_p", "all", 300800},
    {5, "langford:3,14", "neq", "sd_p", "all", 1368322},
    {5, "langford:3,15", "neq", "sd_p", "all", 7515260},
    {5, "langford:3,12", "all-diff", "sd_p", "all", 20795},
    {5, "langford:3,13", "all-diff", "sd_p", "all", 93076},
    {5, "langford:3,14", "all-diff", "sd_p", "all", 405519},
    {5, "langford:3,15", "all-diff", "sd_p", "all", 2072534},
    {5, "langford:3,12", "c", "sd_pd", "all", 11683},
    {5, "langford:3,13", "c", "sd_pd", "all", 45271},
    {5, "langford:3,14", "c", "sd_pd", "all", 184745},
    {5, "langford:3,15", "c", "sd_pd", "all", 846851},
    {5, "langford:3,12", "c", "sd_p", "all", 21148},
    {5, "langford:3,13", "c", "sd_p", "all", 94795},
    {5, "langford:3,14", "c", "sd_p", "all", 412882},
    {5, "langford:3,15", "c", "sd_p", "all", 2112477},
    {5, "langford:3,12", "c", "sd_d", "all", 15214},
    {5, "langford:3,13", "c", "sd_d", "all", 59954},
    {5, "langford:3,14", "c", "sd_d", "all", 249852},
    {5, "langford:3,15", "c", "sd_d", "all", 1144168},
    {5, "langford:3,12", "c", "sd2_pd", "all", 11683},
    {5, "langford:3,13", "c", "sd2_pd", "all", 45271},
    {5, "langford:3,14", "c", "sd2_pd", "all", 184745},
    {5, "langford:3,15", "c", "sd2_pd", "all", 846851},
    {5, "langford:3,12", "c", "sd2_p", "all", 20855},
    {5, "langford:3,13", "c", "sd2_p", "all", 93237},
    {5, "langford:3,14", "c", "sd2_p", "all", 406546},
    {5, "langford:3,15", "c", "sd2_p", "all", 2077692},
    {5, "langford:3,12", "c", "sd2_d", "all", 14314},
    {5, "langford:3,13", "c", "sd2_d", "all", 56413},
    {5, "langford:3,14", "c", "sd2_d", "all", 234770},
    {5, "langford:3,15", "c", "sd2_d", "all", 1076352},
    {5, "langford:3,12", "alldiff-c", "sd_pd", "all", 11449},
    {5, "langford:3,13", "alldiff-c", "sd_pd", "all", 44253},
    {5, "langford:3,14", "alldiff-c", "sd_pd", "all", 180611},
    {5, "langford:3,15", "alldiff-c", "sd_pd", "all", 827564},
    {5, "langford:3,12", "alldiff-c", "sd_p", "all", 20795},
    {5, "langford:3,13", "alldiff-c", "sd_p", "all", 93076},
    {5, "langford:3,14", "alldiff-c", "sd_p", "all", 405519},
    {5, "langford:3,15", "alldiff-c", "sd_p", "all", 2072534},
    {5, "langford:3,12", "alldiff-c", "sd_d", "all", 14459},
    {5, "langford:3,13", "alldiff-c", "sd_d", "all", 56701},
    {5, "langford:3,14", "alldiff-c", "sd_d", "all", 234790},
    {5, "langford:3,15", "alldiff-c", "sd_d", "all", 1069249},
    {5, "langford:3,12", "alldiff-c", "sd2_pd", "all", 11451},
    {5, "langford:3,13", "alldiff-c", "sd2_pd", "all", 44254},
    {5, "langford:3,14", "alldiff-c", "sd2_pd", "all", 180631},
    {5, "langford:3,15", "alldiff-c", "sd2_pd", "all", 827605},
    {5, "langford:3,12", "alldiff-c", "sd2_p", "all", 20488},
    {5, "langford:3,13", "alldiff-c", "sd2_p", "all", 91513},
    {5, "langford:3,14", "alldiff-c", "sd2_p", "all", 399092},
    {5, "langford:3,15", "alldiff-c", "sd2_p", "all", 2037159},
    {5, "langford:3,12", "alldiff-c", "sd2_d", "all", 13639},
    {5, "langford:3,13", "alldiff-c", "sd2_d", "all", 53483},
    {5, "langford:3,14", "alldiff-c", "sd2_d", "all", 221307},
    {5, "langford:3,15", "alldiff-c", "sd2_d", "all", 1009250},
    {6, "qg3:6", "neq", "sd_p", "all", 8},
    {6, "qg3:7", "neq", "sd_p", "all", 100},
    {6, "qg3:8", "neq", "sd_p", "all", 1895},
    {6, "qg3:9", "neq", "sd_p", "all", 83630},
    {6, "qg3:6", "all-diff", "sd_p", "all", 7},
    {6, "qg3:7", "all-diff", "sd_p", "all", 59},
    {6, "qg3:8", "all-diff", "sd_p", "all", 955},
    {6, "qg3:9", "all-diff", "sd_p", "all", 35198},
    {6, "qg3:6", "c", "sd_pd", "all", 7},
    {6, "qg3:7", "c", "sd_pd", "all", 63},
    {6, "qg3:8", "c", "sd_pd", "all", 1117},
    {6, "qg3:9", "c", "sd_pd", "all", 53766},
    {6, "qg3:6", "c", "sd_p", "all", 7},
    {6, "qg3:7", "c", "sd_p", "all", 59},
    {6, "qg3:8", "c", "sd_p", "all", 1039},
    {6, "qg3:9", "c", "sd_p", "all", 38196},
    {6, "qg3:6", "c", "sd_d", "all", 6},
    {6, "qg3:7", "c", "sd_d", "all", 54},
    {6, "qg3:8", "c", "sd_d", "all", 888},
    {6, "qg3:9", "c", "sd_d", "all", 46539},
    {6, "qg3:6", "c", "sd2_pd", "all", 7},
    {6, "qg3:7", "c", "sd2_pd", "all", 63},
    {6, "qg3:8", "c", "sd2_pd", "all", 1117},
    {6, "qg3:9", "c", "sd2_pd", "all", 53785},
    {6, "qg3:6", "c", "sd2_p", "all", 7},
    {6, "qg3:7", "c", "sd2_p", "all", 58},
    {6, "qg3:8", "c", "sd2_p", "all", 1043},
    {6, "qg3:9", "c", "sd2_p", "all", 38198},
    {6, "qg3:6", "c", "sd2_d", "all", 6},
    {6, "qg3:7", "c", "sd2_d", "all", 54},
    {6, "qg3:8", "c", "sd2_d", "all", 887},
    {6, "qg3:9", "c", "sd2_d", "all", 46741},
    {6, "qg3:6", "alldiff-c", "sd_pd", "all", 7},
    {6, "qg3:7", "alldiff-c", "sd_pd", "all", 54},
    {6, "qg3:8", "alldiff-c", "sd_pd", "all", 999},
    {6, "qg3:9", "alldiff-c", "sd_pd", "all", 49678},
    {6, "qg3:6", "alldiff-c", "sd_p", "all", 7},
    {6, "qg3:7", "alldiff-c", "sd_p", "all", 59},
    {6, "qg3:8", "alldiff-c", "sd_p", "all", 955},
    {6, "qg3:9", "alldiff-c", "sd_p", "all", 35198},
    {6, "qg3:6", "alldiff-c", "sd_d", "all", 5},
    {6, "qg3:7", "alldiff-c", "sd_d", "all", 52},
    {6, "qg3:8", "alldiff-c", "sd_d", "all", 824},
    {6, "qg3:9", "alldiff-c", "sd_d", "all", 43278},
    {6, "qg3:6", "alldiff-c", "sd2_pd", "all", 7},
    {6, "qg3:7", "alldiff-c", "sd2_pd", "all", 54},
    {6, "qg3:8", "alldiff-c", "sd2_pd", "all", 999},
    {6, "qg3:9", "alldiff-c", "sd2_pd", "all", 49702},
    {6, "qg3:6", "alldiff-c", "sd2_p", "all", 7},
    {6, "qg3:7", "alldiff-c", "sd2_p", "all", 58},
    {6, "qg3:8", "alldiff-c", "sd2_p", "all", 959},
    {6, "qg3:9", "alldiff-c", "sd2_p", "all", 35201},
    {6, "qg3:6", "alldiff-c", "sd2_d", "all", 5},
    {6, "qg3:7", "alldiff-c", "sd2_d", "all", 52},
    {6, "qg3:8", "alldiff-c", "sd2_d", "all", 823},
    {6, "qg3:9", "alldiff-c", "sd2_d", "all", 43452},
    {7, "qg4:6", "neq", "sd_p", "all", 6},
    {7, "qg4:7", "neq", "sd_p", "all", 82},
    {7, "qg4:8", "neq", "sd_p", "all", 1779},
    {7, "qg4:9", "neq", "sd_p", "all", 116298},
    {7, "qg4:6", "all-diff", "sd_p", "all", 4},
    {7, "qg4:7", "all-diff", "sd_p", "all", 57},
    {7, "qg4:8", "all-diff", "sd_p", "all", 892},
    {7, "qg4:9", "all-diff", "sd_p", "all", 52419},
    {7, "qg4:6", "c", "sd_pd", "all", 6},
    {7, "qg4:7", "c", "sd_pd", "all", 59},
    {7, "qg4:8", "c", "sd_pd", "all", 935},
    {7, "qg4:9", "c", "sd_pd", "all", 55232},
    {7, "qg4:6", "c", "sd_p", "all", 6},
    {7, "qg4:7", "c", "sd_p", "all", 59},
    {7, "qg4:8", "c", "sd_p", "all", 931},
    {7, "qg4:9", "c", "sd_p", "all", 55397},
    {7, "qg4:6", "c", "sd_d", "all", 6},
    {7, "qg4:7", "c", "sd_d", "all", 74},
    {7, "qg4:8", "c", "sd_d", "all", 1266},
    {7, "qg4:9", "c", "sd_d", "all", 83316},
    {7, "qg4:6", "c", "sd2_pd", "all", 6},
    {7, "qg4:7", "c", "sd2_pd", "all", 59},
    {7, "qg4:8", "c", "sd2_pd", "all", 940},
    {7, "qg4:9", "c", "sd2_pd", "all", 55264},
    {7, "qg4:6", "c", "sd2_p", "all", 6},
    {7, "qg4:7", "c", "sd2_p", "all", 59},
    {7, "qg4:8", "c", "sd2_p", "all", 936},
    {7, "qg4:9", "c", "sd2_p", "all", 55442},
    {7, "qg4:6", "c", "sd2_d", "all", 6},
    {7, "qg4:7", "c", "sd2_d", "all", 73},
    {7, "qg4:8", "c", "sd2_d", "all", 1267},
    {7, "qg4:9", "c", "sd2_d", "all", 82916},
    {7, "qg4:6", "alldiff-c", "sd_pd", "all", 4},
    {7, "qg4:7", "alldiff-c", "sd_pd", "all", 57},
    {7, "qg4:8", "alldiff-c", "sd_pd", "all", 900},
    {7, "qg4:9", "alldiff-c", "sd_pd", "all", 52045},
    {7, "qg4:6", "alldiff-c", "sd_p", "all", 4},
    {7, "qg4:7", "alldiff-c", "sd_p", "all", 57},
    {7, "qg4:8", "alldiff-c", "sd_p", "all", 892},
    {7, "qg4:9", "alldiff-c", "sd_p", "all", 52419},
    {7, "qg4:6", "alldiff-c", "sd_d", "all", 4},
    {7, "qg4:7", "alldiff-c", "sd_d", "all", 67},
    {7, "qg4:8", "alldiff-c", "sd_d", "all", 1102},
    {7, "qg4:9", "alldiff-c", "sd_d", "all", 73997},
    {7, "qg4:6", "alldiff-c", "sd2_pd", "all", 4},
    {7, "qg4:7", "alldiff-c", "sd2_pd", "all", 57},
    {7, "qg4:8", "alldiff-c", "sd2_pd", "all", 905},
    {7, "qg4:9", "alldiff-c", "sd2_pd", "all", 52077},
    {7, "qg4:6", "alldiff-c", "sd2_p", "all", 4},
    {7, "qg4:7", "alldiff-c", "sd2_p", "all", 57},
    {7, "qg4:8", "alldiff-c", "sd2_p", "all", 897},
    {7, "qg4:9", "alldiff-c", "sd2_p", "all", 52463},
    {7, "qg4:6", "alldiff-c", "sd2_d", "all", 4},
    {7, "qg4:7", "alldiff-c", "sd2_d", "all", 66},
    {7, "qg4:8", "alldiff-c", "sd2_d", "all", 1104},
    {7, "qg4:9", "alldiff-c", "sd2_d", "all", 73714},
    {8, "golomb:7,25", "neq", "sd_p", "all", 912},
    {8, "golomb:8,34", "neq", "sd_p", "all", 5543},
    {8, "golomb:7,25", "all-diff", "sd_p", "all", 500},
    {8, "golomb:8,34", "all-diff", "sd_p", "all", 2949},
    {8, "golomb:7,25", "c", "sd_pd", "all", 606},
    {8, "golomb:8,34", "c", "sd_pd", "all", 3330},
    {8, "golomb:9,44", "c", "sd_pd", "all", 17002},
    {8, "golomb:10,55", "c", "sd_pd", "all", 72751},
    {8, "golomb:7,25", "c", "sd_p", "all", 890},
    {8, "golomb:8,34", "c", "sd_p", "all", 5343},
    {8, "golomb:7,25", "c", "sd_d", "all", 626},
    {8, "golomb:8,34", "c", "sd_d", "all", 3390},
    {8, "golomb:9,44", "c", "sd_d", "all", 17151},
    {8, "golomb:10,55", "c", "sd_d", "all", 73539},
    {8, "golomb:7,25", "c", "sd2_pd", "all", 608},
    {8, "golomb:8,34", "c", "sd2_pd", "all", 3333},
    {8, "golomb:9,44", "c", "sd2_pd", "all", 17022},
    {8, "golomb:10,55", "c", "sd2_pd", "all", 72853},
    {8, "golomb:7,25", "c", "sd2_p", "all", 928},
    {8, "golomb:8,34", "c", "sd2_p", "all", 5648},
    {8, "golomb:7,25", "c", "sd2_d", "all", 626},
    {8, "golomb:8,34", "c", "sd2_d", "all", 3390},
    {8, "golomb:9,44", "c", "sd2_d", "all", 17179},
    {8, "golomb:10,55", "c", "sd2_d", "all", 73628},
    {8, "golomb:7,25", "alldiff-c", "sd_pd", "all", 493},
    {8, "golomb:8,34", "alldiff-c", "sd_pd", "all", 2771},
    {8, "golomb:9,44", "alldiff-c", "sd_pd", "all", 14313},
    {8, "golomb:10,55", "alldiff-c", "sd_pd", "all", 61572},
    {8, "golomb:7,25", "alldiff-c", "sd_p", "all", 500},
    {8, "golomb:8,34", "alldiff-c", "sd_p", "all", 2949},
    {8, "golomb:7,25", "alldiff-c", "sd_d", "all", 495},
    {8, "golomb:8,34", "alldiff-c", "sd_d", "all", 2782},
    {8, "golomb:9,44", "alldiff-c", "sd_d", "all", 14325},
    {8, "golomb:10,55", "alldiff-c", "sd_d", "all", 61616},
    {8, "golomb:7,25", "alldiff-c", "sd2_pd", "all", 504},
    {8, "golomb:8,34", "alldiff-c", "sd2_pd", "all", 2787},
    {8, "golomb:9,44", "alldiff-c", "sd2_pd", "all", 14392},
    {8, "golomb:10,55", "alldiff-c", "sd2_pd", "all", 61898},
    {8, "golomb:7,25", "alldiff-c", "sd2_p", "all", 542},
    {8, "golomb:8,34", "alldiff-c", "sd2_p", "all", 3258},
    {8, "golomb:7,25", "alldiff-c", "sd2_d", "all", 495},
    {8, "golomb:8,34", "alldiff-c", "sd2_d", "all", 2794},
    {8, "golomb:9,44", "alldiff-c", "sd2_d", "all", 14400},
    {8, "golomb:10,55", "alldiff-c", "sd2_d", "all", 61893},
    {9, "sport:6", "neq", "sd_p", "first", 0},
    {9, "sport:8", "neq", "sd_p", "first", 1248},
    {9, "sport:10", "neq", "sd_p", "first", 1863275},
    {9, "sport:12", "neq", "sd_p", "first", 5777382},
    {9, "sport:6", "all-diff", "sd_p", "first", 0},
    {9, "sport:8", "all-diff", "sd_p", "first", 566},
    {9, "sport:10", "all-diff", "sd_p", "first", 1361686},
    {9, "sport:12", "all-diff", "sd_p", "first", 3522705},
    {9, "sport:6", "c", "sd_pd", "first", 624},
    {9, "sport:8", "c", "sd_pd", "first", 4},
    {9, "sport:10", "c", "sd_pd", "first", 7},
    {9, "sport:12", "c", "sd_pd", "first", 5232},
    {9, "sport:6", "c", "sd_p", "first", 0},
    {9, "sport:8", "c", "sd_p", "first", 566},
    {9, "sport:10", "c", "sd_p", "first", 1376143},
    {9, "sport:12", "c", "sd_p", "first", 3537447},
    {9, "sport:6", "c", "sd_d", "first", 589},
    {9, "sport:8", "c", "sd_d", "first", 3},
    {9, "sport:10", "c", "sd_d", "first", 336},
    {9, "sport:12", "c", "sd_d", "first", 6368},
    {9, "sport:6", "c", "sd2_pd", "first", 7},
    {9, "sport:8", "c", "sd2_pd", "first", 9},
    {9, "sport:10", "c", "sd2_pd", "first", 1112},
    {9, "sport:12", "c", "sd2_pd", "first", 46122},
    {9, "sport:6", "c", "sd2_p", "first", 113},
    {9, "sport:8", "c", "sd2_p", "first", 6601},
    {9, "sport:10", "c", "sd2_p", "first", 820693},
    {9, "sport:6", "c", "sd2_d", "first", 514},
    {9, "sport:8", "c", "sd2_d", "first", 43},
    {9, "sport:10", "c", "sd2_d", "first", 7028},
    {9, "sport:12", "c", "sd2_d", "first", 6252},
    {9, "sport:6", "alldiff-c", "sd_pd", "first", 624},
    {9, "sport:8", "alldiff-c", "sd_pd", "first", 4},
    {9, "sport:10", "alldiff-c", "sd_pd", "first", 7},
    {9, "sport:12", "alldiff-c", "sd_pd", "first", 5190},
    {9, "sport:6", "alldiff-c", "sd_p", "first", 0},
    {9, "sport:8", "alldiff-c", "sd_p", "first", 566},
    {9, "sport:10", "alldiff-c", "sd_p", "first", 1361686},
    {9, "sport:12", "alldiff-c", "sd_p", "first", 3522705},
    {9, "sport:6", "alldiff-c", "sd_d", "first", 589},
    {9, "sport:8", "alldiff-c", "sd_d", "first", 3},
    {9, "sport:10", "alldiff-c", "sd_d", "first", 329},
    {9, "sport:12", "alldiff-c", "sd_d", "first", 6262},
    {9, "sport:6", "alldiff-c", "sd2_pd", "first", 7},
    {9, "sport:8", "alldiff-c", "sd2_pd", "first", 9},
    {9, "sport:10", "alldiff-c", "sd2_pd", "first", 1102},
    {9, "sport:12", "alldiff-c", "sd2_pd", "first", 45125},
    {9, "sport:6", "alldiff-c", "sd2_p", "first", 113},
    {9, "sport:8", "alldiff-c", "sd2_p", "first", 6563},
    {9, "sport:10", "alldiff-c", "sd2_p", "first", 812696},
    {9, "sport:6", "alldiff-c", "sd2_d", "first", 514},
    {9, "sport:8", "alldiff-c", "sd2_d", "first", 43},
    {9, "sport:10", "alldiff-c", "sd2_d", "first", 6920},
    {9, "sport:12", "alldiff-c", "sd2_d", "first", 6129},
    {10, "magic:3", "neq", "sd_p", "first", 6},
    {10, "magic:4", "neq", "sd_p", "first", 20},
    {10, "magic:5", "neq", "sd_p", "first", 1576},
    {10, "magic:3", "all-diff", "sd_p", "first", 4},
    {10, "magic:4", "all-diff", "sd_p", "first", 19},
    {10, "magic:5", "all-diff", "sd_p", "first", 1355},
    {10, "magic:6", "all-diff", "sd_p", "first", 2748609},
    {10, "magic:3", "c", "sd_pd", "first", 5},
    {10, "magic:4", "c", "sd_pd", "first", 18},
    {10, "magic:5", "c", "sd_pd", "first", 4637},
    {10, "magic:3", "c", "sd_p", "first", 4},
    {10, "magic:4", "c", "sd_p", "first", 20},
    {10, "magic:5", "c", "sd_p", "first", 1457},
    {10, "magic:6", "c", "sd_p", "first", 3448162},
    {10, "magic:3", "c", "sd_d", "first", 5},
    {10, "magic:4", "c", "sd_d", "first", 37},
    {10, "magic:5", "c", "sd_d", "first", 49312},
    {10, "magic:3", "c", "sd2_pd", "first", 5},
    {10, "magic:4", "c", "sd2_pd", "first", 10},
    {10, "magic:5", "c", "sd2_pd", "first", 555},
    {10, "magic:6", "c", "sd2_pd", "first", 463865},
    {10, "magic:3", "c", "sd2_p", "first", 4},
    {10, "magic:4", "c", "sd2_p", "first", 11},
    {10, "magic:5", "c", "sd2_p", "first", 495},
    {10, "magic:6", "c", "sd2_p", "first", 1648408},
    {10, "magic:3", "c", "sd2_d", "first", 5},
    {10, "magic:4", "c", "sd2_d", "first", 18},
    {10, "magic:5", "c", "sd2_d", "first", 928217},
    {10, "magic:3", "alldiff-c", "sd_pd", "first", 5},
    {10, "magic:4", "alldiff-c", "sd_pd", "first", 18},
    {10, "magic:5", "alldiff-c", "sd_pd", "first", 4436},
    {10, "magic:3", "alldiff-c", "sd_p", "first", 4},
    {10, "magic:4", "alldiff-c", "sd_p", "first", 19},
    {10, "magic:5", "alldiff-c", "sd_p", "first", 1355},
    {10, "magic:3", "alldiff-c", "sd_d", "first", 5},
    {10, "magic:4", "alldiff-c", "sd_d", "first", 5},
    {10, "magic:5", "alldiff-c", "sd_d", "first", 42426},
    {10, "magic:3", "alldiff-c", "sd2_pd", "first", 5},
    {10, "magic:4", "alldiff-c", "sd2_pd", "first", 10},
    {10, "magic:5", "alldiff-c", "sd2_pd", "first", 435},
    {10, "magic:6", "alldiff-c", "sd2_pd", "first", 290103},
    {10, "magic:3", "alldiff-c", "sd2_p", "first", 4},
    {10, "magic:4", "alldiff-c", "sd2_p", "first", 11},
    {10, "magic:5", "alldiff-c", "sd2_p", "first", 355},
    {10, "magic:6", "alldiff-c", "sd2_p", "first", 1083993},
    {10, "magic:3", "alldiff-c", "sd2_d", "first", 5},
    {10, "magic:4", "alldiff-c", "sd2_d", "first", 16},
    {10, "magic:5", "alldiff-c", "sd2_d", "first", 919057},
    {11, "golomb:8,34", "injection-alldiff", "lex", "first", 82},
    {11, "golomb:9,44", "injection-alldiff", "lex", "first", 724},
    {11, "golomb:10,55", "injection-alldiff", "lex", "first", 3461},
    {11, "golomb:11,72", "injection-alldiff", "lex", "first", 18493},
    {11, "golomb:8,34", "injection-c2", "lex", "first", 104},
    {11, "golomb:9,44", "injection-c2", "lex", "first", 1110},
    {11, "golomb:10,55", "injection-c2", "lex", "first", 7122},
    {11, "golomb:11,72", "injection-c2", "lex", "first", 37404},
    {11, "golomb:8,34", "injection-neq", "lex", "first", 104},
    {11, "golomb:9,44", "injection-neq", "lex", "first", 1110},
    {11, "golomb:10,55", "injection-neq", "lex", "first", 7122},
    {11, "golomb:11,72", "injection-neq", "lex", "first", 37404},
    {11, "golomb:8,34", "injection-alldiff-c2", "lex", "first", 82},
    {11, "golomb:9,44", "injection-alldiff-c2", "lex", "first", 724},
    {11, "golomb:10,55", "injection-alldiff-c2", "lex", "first", 3461},
    {11, "golomb:11,72", "injection-alldiff-c2", "lex", "first", 18493},
    {12, "golomb:8,34", "injection-neq", "sd_p", "first", 326},
    {12, "golomb:9,44", "injection-neq", "sd_p", "first", 3810},
    {12, "golomb:10,55", "injection-neq", "sd_p", "first", 50526},
    {12, "golomb:11,72", "injection-neq", "sd_p", "first", 800169},
    {12, "golomb:8,34", "injection-alldiff", "sd_p", "first", 238},
    {12, "golomb:9,44", "injection-alldiff", "sd_p", "first", 2629},
    {12, "golomb:10,55", "injection-alldiff", "sd_p", "first", 32705},
    {12, "golomb:11,72", "injection-alldiff", "sd_p", "first", 563011},
    {12, "golomb:8,34", "injection-c2", "sd_pd", "first", 11},
    {12, "golomb:9,44", "injection-c2", "sd_pd", "first", 2010},
    {12, "golomb:10,55", "injection-c2", "sd_pd", "first", 2288},
    {12, "golomb:11,72", "injection-c2", "sd_pd", "first", 982},
    {12, "golomb:8,34", "injection-c2", "sd_p", "first", 326},
    {12, "golomb:9,44", "injection-c2", "sd_p", "first", 3810},
    {12, "golomb:10,55", "injection-c2", "sd_p", "first", 50526},
    {12, "golomb:11,72", "injection-c2", "sd_p", "first", 800169},
    {12, "golomb:8,34", "injection-c2", "sd_d", "first", 12},
    {12, "golomb:9,44", "injection-c2", "sd_d", "first", 2333},
    {12, "golomb:10,55", "injection-c2", "sd_d", "first", 2822},
    {12, "golomb:11,72", "injection-c2", "sd_d", "first", 1254},
    {12, "golomb:8,34", "injection-c2", "sd2_pd", "first", 12},
    {12, "golomb:9,44", "injection-c2", "sd2_pd", "first", 2033},
    {12, "golomb:10,55", "injection-c2", "sd2_pd", "first", 2374},
    {12, "golomb:11,72", "injection-c2", "sd2_pd", "first", 984},
    {12, "golomb:8,34", "injection-c2", "sd2_p", "first", 335},
    {12, "golomb:9,44", "injection-c2", "sd2_p", "first", 4244},
    {12, "golomb:10,55", "injection-c2", "sd2_p", "first", 57158},
    {12, "golomb:11,72", "injection-c2", "sd2_p", "first", 898457},
    {12, "golomb:8,34", "injection-c2", "sd2_d", "first", 12},
    {12, "golomb:9,44", "injection-c2", "sd2_d", "first", 2342},
    {12, "golomb:10,55", "injection-c2", "sd2_d", "first", 2911},
    {12, "golomb:11,72", "injection-c2", "sd2_d", "first", 1247},
    {12, "golomb:8,34", "injection-alldiff-c2", "sd_pd", "first", 10},
    {12, "golomb:9,44", "injection-alldiff-c2", "sd_pd", "first", 904},
    {12, "golomb:10,55", "injection-alldiff-c2", "sd_pd", "first", 1076},
    {12, "golomb:11,72", "injection-alldiff-c2", "sd_pd", "first", 598},
    {12, "golomb:8,34", "injection-alldiff-c2", "sd_p", "first", 238},
    {12, "golomb:9,44", "injection-alldiff-c2", "sd_p", "first", 2629},
    {12, "golomb:10,55", "injection-alldiff-c2", "sd_p", "first", 32705},
    {12, "golomb:11,72", "injection-alldiff-c2", "sd_p", "first", 563011},
    {12, "golomb:8,34", "injection-alldiff-c2", "sd_d", "first", 11},
    {12, "golomb:9,44", "injection-alldiff-c2", "sd_d", "first", 906},
    {12, "golomb:10,55", "injection-alldiff-c2", "sd_d", "first", 1087},
    {12, "golomb:11,72", "injection-alldiff-c2", "sd_d", "first", 605},
    {12, "golomb:8,34", "injection-alldiff-c2", "sd2_pd", "first", 10},
    {12, "golomb:9,44", "injection-alldiff-c2", "sd2_pd", "first", 914},
    {12, "golomb:10,55", "injection-alldiff-c2", "sd2_pd", "first", 1125},
    {12, "golomb:11,72", "injection-alldiff-c2", "sd2_pd", "first", 588},
    {12, "golomb:8,34", "injection-alldiff-c2", "sd2_p", "first", 254},
    {12, "golomb:9,44", "injection-alldiff-c2", "sd2_p", "first", 3054},
    {12, "golomb:10,55", "injection-alldiff-c2", "sd2_p", "first", 39143},
    {12, "golomb:11,72", "injection-alldiff-c2", "sd2_p", "first", 663896},
    {12, "golomb:8,34", "injection-alldiff-c2", "sd2_d", "first", 11},
    {12, "golomb:9,44", "injection-alldiff-c2", "sd2_d", "first", 909},
    {12, "golomb:10,55", "injection-alldiff-c2", "sd2_d", "first", 1131},
    {12, "golomb:11,72", "injection-alldiff-c2", "sd2_d", "first", 592},
    {13, "sport:7", "injection-neq", "sd_p", "first", 14},
    {13, "sport:9", "injection-neq", "sd_p", "first", 140287},
    {13, "sport:7", "injection-alldiff", "sd_p", "first", 14},
    {13, "sport:9", "injection-alldiff", "sd_p", "first", 138643},
    {13, "sport:7", "injection-c2", "sd_pd", "first", 3},
    {13, "sport:9", "injection-c2", "sd_pd", "first", 34},
    {13, "sport:11", "injection-c2", "sd_pd", "first", 43877},
    {13, "sport:7", "injection-c2", "sd_p", "first", 14},
    {13, "sport:9", "injection-c2", "sd_p", "first", 140294},
    {13, "sport:7", "injection-c2", "sd_d", "first", 0},
    {13, "sport:9", "injection-c2", "sd_d", "first", 33},
    {13, "sport:11", "injection-c2", "sd_d", "first", 1829954},
    {13, "sport:7", "injection-c2", "sd2_pd", "first", 3},
    {13, "sport:9", "injection-c2", "sd2_pd", "first", 4535},
    {13, "sport:11", "injection-c2", "sd2_pd", "first", 910362},
    {13, "sport:7", "injection-c2", "sd2_p", "first", 14},
    {13, "sport:9", "injection-c2", "sd2_p", "first", 143989},
    {13, "sport:7", "injection-c2", "sd2_d", "first", 2},
    {13, "sport:9", "injection-c2", "sd2_d", "first", 11424},
    {13, "sport:11", "injection-c2", "sd2_d", "first", 12536523},
    {13, "sport:7", "injection-alldiff-c2", "sd_pd", "first", 3},
    {13, "sport:9", "injection-alldiff-c2", "sd_pd", "first", 28},
    {13, "sport:11", "injection-alldiff-c2", "sd_pd", "first", 38555},
    {13, "sport:7", "injection-alldiff-c2", "sd_p", "first", 14},
    {13, "sport:9", "injection-alldiff-c2", "sd_p", "first", 138643},
    {13, "sport:7", "injection-alldiff-c2", "sd_d", "first", 0},
    {13, "sport:9", "injection-alldiff-c2", "sd_d", "first", 31},
    {13, "sport:11", "injection-alldiff-c2", "sd_d", "first", 374829},
    {13, "sport:7", "injection-alldiff-c2", "sd2_pd", "first", 3},
    {13, "sport:9", "injection-alldiff-c2", "sd2_pd", "first", 2013},
    {13, "sport:11", "injection-alldiff-c2", "sd2_pd", "first", 600686},
    {13, "sport:7", "injection-alldiff-c2", "sd2_p", "first", 14},
    {13, "sport:9", "injection-alldiff-c2", "sd2_p", "first", 142313},
    {13, "sport:7", "injection-alldiff-c2", "sd2_d", "first", 2},
    {13, "sport:9", "injection-alldiff-c2", "sd2_d", "first", 3238},
    {13, "sport:11", "injection-alldiff-c2", "sd2_d", "first", 1854082},
    };
    return cells;
}

const ReferenceCell* find_reference(const std::string& instance, const std::string& model,
                                    const std::string& heuristic, const std::string& goal) {
    for (const ReferenceCell& c : reference_cells())
        if (c.instance == instance && c.model == model && c.heuristic == heuristic &&
            c.goal == goal)
            return &c;
    return nullptr;
}

}  // namespace permuta::bench

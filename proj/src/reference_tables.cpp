#include "stieltjes/reference_tables.hpp"

namespace stieltjes::tables {

const std::array<CoeffRow, 6> kCoeffs100 = {{
    {1, "-0.3158578918", "+0.1626819326"},
    {2, "-2.9096870797", "-2.1947177121"},
    {3, "-0.3804847598", "-3.3953890569"},
    {4, "+1.4820479884", "-0.1130053628"},
    {5, "-0.2630549338", "+0.9253656779"},
    {6, "-0.3783700609", "-0.3119889058"},
}};

const std::array<CoeffRow, 6> kCoeffs1000 = {{
    {1, "-0.0885061806", "+0.1958085240"},
    {2, "-6.5840165991", "-2.6459812815"},
    {3, "-9.4682639154", "-10.09635962642"},
    {4, "-1.3074432243", "-11.31040992292"},
    {5, "+4.9469591967", "-1.67819725309"},
    {6, "+0.8180579543", "+3.98701271605"},
}};

const std::array<RelErrRow, 7> kRelErr = {{
    {0, "1.759e-3", "1.412e-3", "", "1.597e-4"},
    {1, "6.503e-4", "3.226e-4", "2.701e-1", "2.649e-6"},
    {2, "1.244e-5", "4.472e-6", "8.775e-2", "4.125e-9"},
    {3, "3.063e-7", "9.370e-8", "3.811e-5", "7.711e-11"},
    {4, "2.535e-9", "7.850e-10", "2.183e-6", "2.026e-13"},
    {5, "5.101e-10", "9.022e-11", "1.248e-8", "6.157e-16"},
    {6, "1.850e-11", "1.982e-12", "9.415e-10", "2.743e-18"},
}};

const std::array<K2Row, 7> kRelErr25 = {{
    {0, "1.051e-2", "1.052e-2"},
    {1, "2.909e-3", "2.894e-3"},
    {2, "2.608e-4", "2.460e-4"},
    {3, "2.390e-6", "1.723e-5"},
    {4, "1.518e-5", "3.412e-7"},
    {5, "1.495e-5", "1.160e-7"},
    {6, "1.482e-5", "1.189e-8"},
}};

const std::array<ValueRow, 7> kValues = {{
    {10, +1, "2105395", -4, +1, "204713213", -4, +1, "205332814", -4},
    {50, +1, "1275493", 2, +1, "126823798", 2, +1, "126823602", 2},
    {80, +1, "2514857", 10, +1, "251633995", 10, +1, "251634410", 10},
    {100, -1, "4259408", 17, -1, "425340036", 17, -1, "425340157", 17},
    {137, +1, "3898740", 27, -1, "799377883", 27, -1, "799522199", 27},
    {200, -1, "7060244", 55, -1, "697465335", 55, -1, "697464971", 55},
    {500, -1, "1165662", 204, -1, "116550527", 204, -1, "116550527", 204},
}};

}  // namespace stieltjes::tables

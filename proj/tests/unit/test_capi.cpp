// Copyright 2026 The hyperwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the shared library through the public header only.

#include <cstring>
#include <string>

#include <gtest/gtest.h>

#include "hyperwit/hyperwit.h"

namespace {

class Text {
   public:
    ~Text() {
        hw_string_free(p_);
    }
    char **out() {
        return &p_;
    }
    std::string str() const {
        return p_ ? p_ : "";
    }

   private:
    char *p_ = nullptr;
};

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STREQ(hw_version(), "0.1.0");
    EXPECT_STREQ(hw_status_name(HW_OK), "ok");
    EXPECT_STREQ(hw_status_name(HW_ERR_LIMIT), "limit exceeded");
}

TEST(CApi, HypergraphLifecycle) {
    hw_hypergraph *h = nullptr;
    ASSERT_EQ(hw_hypergraph_parse("n=4; edges=[[3,4],[1,2,3]]", &h), HW_OK);
    int n = 0, k = 0, connected = 0;
    size_t m = 0;
    EXPECT_EQ(hw_hypergraph_num_vertices(h, &n), HW_OK);
    EXPECT_EQ(hw_hypergraph_num_edges(h, &m), HW_OK);
    EXPECT_EQ(hw_hypergraph_k_max(h, &k), HW_OK);
    EXPECT_EQ(hw_hypergraph_is_connected(h, &connected), HW_OK);
    EXPECT_EQ(n, 4);
    EXPECT_EQ(m, 2u);
    EXPECT_EQ(k, 3);
    EXPECT_EQ(connected, 1);
    Text s;
    ASSERT_EQ(hw_hypergraph_to_string(h, s.out()), HW_OK);
    EXPECT_EQ(s.str(), "n=4; edges=[[1,2,3],[3,4]]");
    hw_hypergraph_free(h);
    hw_hypergraph_free(nullptr);
}

TEST(CApi, ErrorsMapToStatusCodes) {
    hw_hypergraph *h = nullptr;
    EXPECT_EQ(hw_hypergraph_parse("n=3; edges=[[1,9]]", &h), HW_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(h, nullptr);
    EXPECT_NE(std::strstr(hw_last_error_message(), "vertex"), nullptr);
    EXPECT_EQ(hw_hypergraph_parse(nullptr, &h), HW_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(hw_hypergraph_family(HW_FAMILY_ALL_N_MINUS_1, 2, &h), HW_ERR_INVALID_ARGUMENT);

    hw_hypergraph *dis = nullptr;
    ASSERT_EQ(hw_hypergraph_from_edges_json(4, "[[1,2],[3,4]]", &dis), HW_OK);
    double bound = 0, e = 0;
    int holds = 0;
    EXPECT_EQ(hw_lower_bound(dis, nullptr, &bound, &e, &holds), HW_ERR_PRECONDITION);
    hw_hypergraph_free(dis);

    hw_hypergraph *big = nullptr;
    ASSERT_EQ(hw_hypergraph_family(HW_FAMILY_SINGLE_MAX, 9, &big), HW_OK);
    hw_limits lim;
    hw_limits_default(&lim);
    Text out;
    int passed = 1;
    EXPECT_EQ(hw_report_verify(big, "projector", &lim, out.out(), &passed), HW_ERR_LIMIT);
    EXPECT_NE(std::strstr(hw_last_error_message(), "dense"), nullptr);
    hw_hypergraph_free(big);
}

TEST(CApi, StateRoundTrip) {
    hw_hypergraph *h = nullptr;
    ASSERT_EQ(hw_hypergraph_family(HW_FAMILY_ALL_N_MINUS_1, 3, &h), HW_OK);
    hw_state *s = nullptr;
    ASSERT_EQ(hw_state_build(h, &s), HW_OK);
    int sign = 0;
    EXPECT_EQ(hw_state_sign(s, 3, &sign), HW_OK);
    EXPECT_EQ(sign, -1);
    EXPECT_EQ(hw_state_sign(s, 8, &sign), HW_ERR_INVALID_ARGUMENT);
    Text hex;
    ASSERT_EQ(hw_state_to_hex(s, hex.out()), HW_OK);
    EXPECT_EQ(hex.str(), "e8");

    hw_state *back = nullptr;
    ASSERT_EQ(hw_state_from_hex(3, hex.str().c_str(), &back), HW_OK);
    hw_hypergraph *g = nullptr;
    int phase = 0;
    ASSERT_EQ(hw_state_extract(back, &g, &phase), HW_OK);
    Text a, b;
    hw_hypergraph_to_string(h, a.out());
    hw_hypergraph_to_string(g, b.out());
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(phase, 1);
    hw_hypergraph_free(g);
    hw_state_free(back);
    hw_state_free(s);
    hw_hypergraph_free(h);
}

TEST(CApi, Scalars) {
    hw_hypergraph *h = nullptr;
    ASSERT_EQ(hw_hypergraph_family(HW_FAMILY_SINGLE_MAX, 5, &h), HW_OK);
    hw_state *s = nullptr;
    ASSERT_EQ(hw_state_build(h, &s), HW_OK);
    double brute = 0, closed = 0;
    EXPECT_EQ(hw_alpha_brute(s, nullptr, &brute), HW_OK);
    EXPECT_EQ(hw_alpha_closed_form(HW_FAMILY_SINGLE_MAX, 5, &closed), HW_OK);
    EXPECT_NEAR(brute, 15.0 / 16.0, 1e-9);
    EXPECT_DOUBLE_EQ(closed, 15.0 / 16.0);
    double bound = 0, e = 0;
    int holds = 0;
    EXPECT_EQ(hw_lower_bound(h, nullptr, &bound, &e, &holds), HW_OK);
    EXPECT_DOUBLE_EQ(bound, 1.0 / 16.0);
    EXPECT_EQ(holds, 1);
    hw_state_free(s);
    hw_hypergraph_free(h);
}

TEST(CApi, Reports) {
    hw_hypergraph *h = nullptr;
    ASSERT_EQ(hw_hypergraph_from_edges_json(5, "[[1,2],[3,4],[3,4,5],[2,3,4,5]]", &h), HW_OK);
    Text out;
    int passed = 0;
    ASSERT_EQ(hw_report_reduce(h, "1,2,3", nullptr, HW_FORMAT_JSON, out.out(), &passed), HW_OK);
    EXPECT_EQ(passed, 1);
    EXPECT_NE(out.str().find("\"bound\": 0.25"), std::string::npos);

    Text table;
    ASSERT_EQ(hw_report_robustness_table(HW_FAMILY_SINGLE_MAX, 2, 3, HW_FORMAT_CSV, table.out()),
              HW_OK);
    EXPECT_EQ(table.str(),
              "n,pL_num,pL_den,pL,ptilde_num,ptilde_den,ptilde\n"
              "2,2,3,0.6666666666666666,1,2,0.5\n"
              "3,2,7,0.2857142857142857,1,6,0.16666666666666666\n");

    Text settings;
    ASSERT_EQ(hw_report_settings(h, "stabilizer", nullptr, "canonical", 0, nullptr,
                                 settings.out()),
              HW_OK);
    EXPECT_NE(settings.str().find("\"count\": 5"), std::string::npos);
    Text rejected;
    EXPECT_EQ(hw_report_settings(h, "stabilizer", nullptr, "best", 0, nullptr, rejected.out()),
              HW_ERR_INVALID_ARGUMENT);
    hw_hypergraph_free(h);
}

TEST(CApi, RandomIsSeeded) {
    hw_hypergraph *a = nullptr, *b = nullptr;
    ASSERT_EQ(hw_hypergraph_random_connected(5, 6, &a), HW_OK);
    ASSERT_EQ(hw_hypergraph_random_connected(5, 6, &b), HW_OK);
    Text sa, sb;
    hw_hypergraph_to_string(a, sa.out());
    hw_hypergraph_to_string(b, sb.out());
    EXPECT_EQ(sa.str(), sb.str());
    int connected = 0;
    hw_hypergraph_is_connected(a, &connected);
    EXPECT_EQ(connected, 1);
    hw_hypergraph_free(a);
    hw_hypergraph_free(b);
}

}  // namespace

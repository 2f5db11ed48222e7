#include <stdio.h>
#include <string.h>

#include "osculate.h"

static int fails = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            fails++;                                                   \
        }                                                              \
    } while (0)

int main(void) {
    uint32_t start[2] = {1, 1};
    OscTable *table = NULL;
    EXPECT(osc_enumerate("osculating", start, 2, 2, false, &table) == OSC_STATUS_OK);
    uint64_t total = 0;
    for (size_t k = 0; k < osc_table_len(table); k++) {
        OscEntry e;
        EXPECT(osc_table_entry(table, k, &e) == OSC_STATUS_OK);
        if (e.n == 2) total += e.count;
    }
    EXPECT(total == 40);
    char *csv = osc_table_to_csv(table);
    EXPECT(strncmp(csv, "n,gap1,gap2,osc,count\n", 22) == 0);
    osc_string_free(csv);
    osc_table_free(table);

    uint32_t bad[2] = {0, 1};
    EXPECT(osc_enumerate("vicious", bad, 2, 3, false, &table) == OSC_STATUS_BAD_START);
    EXPECT(table == NULL);
    EXPECT(osc_last_error_message() != NULL);

    char *json = NULL;
    EXPECT(osc_series_json("baxter", NULL, 0, 6, &json) == OSC_STATUS_OK);
    EXPECT(strstr(json, "422") != NULL);
    osc_string_free(json);

    EXPECT(osc_verify("orbit", 1, 1, 6, &json) == OSC_STATUS_OK);
    EXPECT(strstr(json, "\"passed\":true") != NULL);
    osc_string_free(json);

    printf("%s %s\n", osc_version(), fails ? "FAIL" : "OK");
    return fails ? 1 : 0;
}

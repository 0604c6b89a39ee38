import csv
import io

from .base import BaseSerializer


class CsvSerializer(BaseSerializer):
    """A serializer writing the accuracy table of a report.

    The table is in long format, with one row per dataset and budget, and
    the accuracy change relative to the 1024-token budget as a percentage,
    left empty when undefined.
    """

    format = "csv"

    def dump(self, file):
        text = io.StringIO(newline="")
        writer = csv.writer(text, lineterminator="\n")
        writer.writerow(["dataset", "budget", "accuracy", "relative_drop"])
        drops = self.report.relative_drops()
        for dataset, row in self.report.accuracies().items():
            for budget, accuracy in row.items():
                drop = drops[dataset].get(budget)
                writer.writerow(
                    [
                        dataset,
                        budget,
                        f"{accuracy * 100:.1f}",
                        "" if drop is None else f"{drop:.1f}",
                    ]
                )
        file.write(text.getvalue().encode("utf-8"))

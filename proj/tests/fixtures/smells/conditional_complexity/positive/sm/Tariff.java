package sm;

public class Tariff {
    private int total;

    public int price(int x) {
        if (x > 0) { total++; }
        if (x > 10) { total++; }
        if (x > 20) { total++; }
        if (x > 30) { total++; }
        if (x > 40) { total++; }
        if (x > 50) { total++; }
        if (x > 60) { total++; }
        if (x > 70) { total++; }
        if (x > 80) { total++; }
        return total;
    }
}
